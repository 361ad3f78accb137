from fractions import Fraction

from django.conf import settings
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from scalars.utils import rational_string

COMMANDS = (
    "abelian-volume",
    "acyclic-volume",
    "quot-volume",
    "grothendieck-degree",
    "verify",
    "sweep",
)

T_MODES = ("ttilde-symbolic", "ttilde-value", "physical-t")

SUITES = (
    "weight-independence",
    "rank-one-reduction",
    "acyclic-crosscheck",
    "manton-nasir",
    "splitting-independence",
    "degree-integrality",
)

FORMATS = ("json", "latex", "plain")


def validate_weight_vectors(weight_vectors, r):
    '''
    Every weight vector needs r pairwise distinct entries
    '''
    for index, weights in enumerate(weight_vectors):
        if len(weights) != r:
            raise serializers.ValidationError({"weights": {index: _("Expected %s weights.") % r}})
        if len(set(weights)) != len(weights):
            raise serializers.ValidationError({"weights": {index: _("Weights must be pairwise distinct.")}})


class RationalField(serializers.Field):
    '''
    Exact rational given as an integer or a "num/den" string. Floats are refused.
    '''
    default_error_messages = {
        'invalid': _("Enter an exact rational as an integer or a 'num/den' string."),
        'zero_denominator': _("The denominator must be nonzero."),
    }

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            self.fail('invalid')
        try:
            return Fraction(data)
        except ZeroDivisionError:
            self.fail('zero_denominator')
        except ValueError:
            self.fail('invalid')

    def to_representation(self, value):
        return rational_string(value)


class TParameterSerializer(serializers.Serializer):
    '''
    How the volume polynomial is evaluated: kept symbolic in 𝔱, evaluated at a rational 𝔱,
    or evaluated at a physical vortex parameter t on a base of volume vol_X.
    '''
    mode = serializers.ChoiceField(choices=T_MODES, default="ttilde-symbolic")
    value = RationalField(required=False)
    vol_X = RationalField(required=False)
    pi_probe = RationalField(required=False)

    def validate(self, validated_data):
        mode = validated_data["mode"]
        if mode in ("ttilde-value", "physical-t") and "value" not in validated_data:
            raise serializers.ValidationError({"value": _("This field is required for mode %s.") % mode})
        if mode == "physical-t" and "vol_X" not in validated_data:
            raise serializers.ValidationError({"vol_X": _("This field is required for mode physical-t.")})
        if validated_data.get("pi_probe") == 0:
            raise serializers.ValidationError({"pi_probe": _("The π probe must be nonzero.")})
        return validated_data


class KappaTermSerializer(serializers.Serializer):
    indices = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_empty=True)
    coeff = RationalField()


class KappaSerializer(serializers.Serializer):
    i = serializers.IntegerField(min_value=1)
    s = serializers.IntegerField(min_value=0)
    terms = KappaTermSerializer(many=True)


class CurveDataSerializer(serializers.Serializer):
    r0 = serializers.IntegerField(min_value=1, default=1)
    deg_E0 = serializers.IntegerField()
    m = serializers.IntegerField()


class JobSpecSerializer(serializers.Serializer):
    '''
    Fields shared by every job document
    '''
    schema = serializers.IntegerField(default=1)
    command = serializers.ChoiceField(choices=COMMANDS)
    format = serializers.ChoiceField(choices=FORMATS, required=False)
    t = TParameterSerializer(required=False)

    def validate_schema(self, value):
        if value != settings.QUOTVOL['SCHEMA_VERSION']:
            raise serializers.ValidationError(_("Unsupported schema version %s.") % value)
        return value


class AbelianVolumeSerializer(JobSpecSerializer):
    g = serializers.IntegerField(min_value=0)
    d = serializers.IntegerField(min_value=0)
    deg_E = RationalField(required=False)
    l = serializers.ListField(child=serializers.IntegerField(), min_length=1, max_length=1, required=False)

    def validate(self, validated_data):
        if "deg_E" not in validated_data:
            if "l" not in validated_data:
                raise serializers.ValidationError({"deg_E": _("Give deg_E or the one-element list l.")})
            validated_data["deg_E"] = Fraction(validated_data["l"][0] - validated_data["d"])
        return validated_data


class AcyclicVolumeSerializer(JobSpecSerializer):
    '''
    Either explicit pairing data (n_dim, q, deg_E, pairings, h, kappa) or a curve
    sub-document together with the genus g.
    '''
    g = serializers.IntegerField(min_value=0, required=False)
    curve = CurveDataSerializer(required=False)
    n_dim = serializers.IntegerField(min_value=1, required=False)
    q = serializers.IntegerField(min_value=0, required=False)
    deg_E = RationalField(required=False)
    pairings = serializers.ListField(child=RationalField(), required=False)
    h = serializers.ListField(child=serializers.ListField(child=RationalField()), required=False)
    kappa = KappaSerializer(many=True, required=False)

    def validate(self, validated_data):
        if "curve" in validated_data:
            if "g" not in validated_data:
                raise serializers.ValidationError({"g": _("This field is required with curve data.")})
            return validated_data
        for name in ("n_dim", "q", "deg_E", "pairings", "h"):
            if name not in validated_data:
                raise serializers.ValidationError({name: _("This field is required without curve data.")})
        size = 2 * validated_data["q"]
        h = validated_data["h"]
        if len(h) != size or any(len(row) != size for row in h):
            raise serializers.ValidationError({"h": _("Expected a %s x %s matrix.") % (size, size)})
        seen = set()
        for index, entry in enumerate(validated_data.get("kappa", [])):
            key = (entry["i"], entry["s"])
            if key in seen:
                raise serializers.ValidationError({"kappa": {index: _("Duplicate kappa form (%s, %s).") % key}})
            seen.add(key)
        return validated_data


class QuotVolumeSerializer(JobSpecSerializer):
    g = serializers.IntegerField(min_value=0)
    r = serializers.IntegerField(min_value=1)
    l = serializers.ListField(child=serializers.IntegerField())
    d = serializers.IntegerField(min_value=0)
    weights = serializers.ListField(child=serializers.ListField(child=RationalField()), required=False)

    def validate(self, validated_data):
        r = validated_data["r"]
        if len(validated_data["l"]) != r:
            raise serializers.ValidationError({"l": _("Expected %s line bundle degrees.") % r})
        validate_weight_vectors(validated_data.get("weights", []), r)
        return validated_data


class GrothendieckDegreeSerializer(QuotVolumeSerializer):
    n = serializers.IntegerField(min_value=1)


class VerifySerializer(JobSpecSerializer):
    '''
    Each suite reads only the fields it needs; validate() enforces them per suite.
    '''
    suite = serializers.ChoiceField(choices=SUITES)
    g = serializers.IntegerField(min_value=0, required=False)
    r = serializers.IntegerField(min_value=1, required=False)
    l = serializers.ListField(child=serializers.IntegerField(), required=False)
    d = serializers.IntegerField(min_value=0, required=False)
    n = serializers.IntegerField(min_value=1, required=False)
    deg_E0 = serializers.IntegerField(required=False)
    vol_X = RationalField(required=False)
    pi_probes = serializers.ListField(child=RationalField(), required=False, min_length=1)
    weights = serializers.ListField(child=serializers.ListField(child=RationalField()), required=False)

    required_fields = {
        "weight-independence": ("g", "r", "l", "d"),
        "rank-one-reduction": ("g", "d"),
        "acyclic-crosscheck": ("g", "d"),
        "manton-nasir": ("g", "d"),
        "splitting-independence": ("g", "r", "l", "d"),
        "degree-integrality": ("g", "r", "l", "d"),
    }

    def validate(self, validated_data):
        suite = validated_data["suite"]
        for name in self.required_fields[suite]:
            if name not in validated_data:
                raise serializers.ValidationError({name: _("This field is required for suite %s.") % suite})
        if "r" in validated_data and "l" in validated_data and len(validated_data["l"]) != validated_data["r"]:
            raise serializers.ValidationError({"l": _("Expected %s line bundle degrees.") % validated_data["r"]})
        if suite == "rank-one-reduction" and len(validated_data.get("l", [0])) != 1:
            raise serializers.ValidationError({"l": _("The rank one reduction takes a single degree.")})
        if "weights" in validated_data:
            if "r" not in validated_data:
                raise serializers.ValidationError({"r": _("Weight vectors need the rank r.")})
            validate_weight_vectors(validated_data["weights"], validated_data["r"])
        if 0 in validated_data.get("pi_probes", []):
            raise serializers.ValidationError({"pi_probes": _("π probes must be nonzero.")})
        return validated_data


class SweepSerializer(JobSpecSerializer):
    '''
    Ranges are explicit lists; rows follow the order g, r, d, l of the lists given.
    '''
    g_values = serializers.ListField(child=serializers.IntegerField(min_value=0))
    d_values = serializers.ListField(child=serializers.IntegerField(min_value=0))
    r = serializers.IntegerField(min_value=1, required=False)
    r_values = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False)
    l_list = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()), required=False)
    l_total = serializers.IntegerField(min_value=0, required=False)

    def validate(self, validated_data):
        if "r" in validated_data and "r_values" in validated_data:
            raise serializers.ValidationError({"r_values": _("Give either r or r_values.")})
        if "r" not in validated_data and "r_values" not in validated_data:
            raise serializers.ValidationError({"r": _("Give either r or r_values.")})
        if ("l_list" in validated_data) == ("l_total" in validated_data):
            raise serializers.ValidationError({"l_list": _("Give exactly one of l_list and l_total.")})
        if "r" in validated_data:
            validated_data["r_values"] = [validated_data.pop("r")]
        return validated_data


COMMAND_SERIALIZERS = {
    "abelian-volume": AbelianVolumeSerializer,
    "acyclic-volume": AcyclicVolumeSerializer,
    "quot-volume": QuotVolumeSerializer,
    "grothendieck-degree": GrothendieckDegreeSerializer,
    "verify": VerifySerializer,
    "sweep": SweepSerializer,
}
