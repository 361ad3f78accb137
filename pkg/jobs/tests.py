import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings
from rest_framework.exceptions import ValidationError

from .dispatch import run_job, splittings, sweep
from .serializers import QuotVolumeSerializer, RationalField, SweepSerializer
from .utils import error_pointer, parse_document, render_document


def quotvol(*args, stdin=None, **options):
    '''
    Runs the quotvol command and returns its standard output
    '''
    out = StringIO()
    if stdin is not None:
        options['stdin'] = StringIO(stdin if isinstance(stdin, str) else json.dumps(stdin))
    call_command('quotvol', *args, stdout=out, **options)
    return out.getvalue()


class QuotVolumeCommandTests(SimpleTestCase):

    def test_plain_volume(self):
        output = quotvol('quot-volume', g=2, r=2, l='1,1', d=1, format='plain')
        self.assertEqual(output.strip(), "𝔱 + 2")

    def test_latex_volume(self):
        output = quotvol('quot-volume', g=2, r=2, l='1,1', d=1, format='latex')
        self.assertEqual(output.strip(), r"\mathfrak{t} + 2")

    def test_json_document(self):
        document = json.loads(quotvol('quot-volume', g=1, r=2, l='0,0', d=2))
        self.assertEqual(document["schema"], 1)
        self.assertEqual(document["input"]["command"], "quot-volume")
        self.assertEqual(document["volume"], {"variable": "ttilde", "coefficients": ["0/1", "-2/3", "1/2"]})
        self.assertEqual(document["warnings"], [])
        self.assertNotIn("timing", document)

    def test_ttilde_evaluation(self):
        document = json.loads(quotvol('quot-volume', g=2, r=2, l='1,1', d=1, ttilde='3'))
        self.assertEqual(document["evaluation"]["mode"], "ttilde-value")
        self.assertEqual(document["evaluation"]["value"], "5/1")
        self.assertTrue(document["evaluation"]["exact"])

    def test_document_from_stdin(self):
        job = {"command": "quot-volume", "g": 2, "r": 2, "l": [1, 1], "d": 1, "format": "plain"}
        self.assertEqual(quotvol(stdin=job).strip(), "𝔱 + 2")

    def test_flags_override_the_document(self):
        job = {"command": "quot-volume", "g": 5, "r": 2, "l": [1, 1], "d": 1}
        self.assertEqual(quotvol(stdin=job, g=2, format='plain').strip(), "𝔱 + 2")

    def test_timing(self):
        document = json.loads(quotvol('quot-volume', g=0, r=1, l='2', d=1, timing=True))
        self.assertIn("seconds", document["timing"])

    def test_output_is_deterministic(self):
        job = {"command": "quot-volume", "g": 1, "r": 3, "l": [1, 0, 0], "d": 2}
        self.assertEqual(quotvol(stdin=job), quotvol(stdin=job))

    def test_document_round_trip(self):
        output = quotvol('grothendieck-degree', g=1, r=2, l='2,0', d=2, n=5).rstrip("\n")
        self.assertEqual(render_document(parse_document(output)), output)

    def test_workers_do_not_change_the_result(self):
        job = {"command": "quot-volume", "g": 2, "r": 2, "l": [2, 1], "d": 3}
        self.assertEqual(quotvol(stdin=job, workers=1), quotvol(stdin=job, workers=3))


class OtherCommandsTests(SimpleTestCase):

    def test_grothendieck_degree(self):
        output = quotvol('grothendieck-degree', g=0, r=2, l='0,0', d=1, n=4, format='plain')
        self.assertEqual(output.strip(), "8")

    def test_grothendieck_embedding_block(self):
        document = json.loads(quotvol('grothendieck-degree', g=1, r=2, l='0,0', d=1, n=3))
        self.assertEqual(document["degree"], "6")
        self.assertEqual(document["embedding"]["s"], 5)
        self.assertEqual(document["embedding"]["ambient_dimension"], 5)

    def test_abelian_volume(self):
        output = quotvol(stdin={"command": "abelian-volume", "g": 0, "d": 1, "deg_E": 2, "format": "plain"})
        self.assertEqual(output.strip(), "𝔱 + 2")

    def test_acyclic_volume_with_curve_data(self):
        job = {"command": "acyclic-volume", "g": 1, "curve": {"deg_E0": 0, "m": -2}}
        document = json.loads(quotvol(stdin=job))
        self.assertEqual(document["warnings"], [])
        self.assertEqual(document["dimension"], 2)

    def test_acyclic_volume_outside_the_range_warns(self):
        job = {"command": "acyclic-volume", "g": 2, "curve": {"deg_E0": 0, "m": -2}}
        with self.assertLogs('abelian.volumes', level='WARNING'):
            document = run_job(job).document
        self.assertEqual(len(document["warnings"]), 1)

    def test_verify_weight_independence(self):
        document = json.loads(quotvol('verify', suite='weight-independence', g=1, r=2, l='2,0', d=2))
        self.assertTrue(document["verify"]["pass"])
        self.assertEqual(document["verify"]["candidates"], 3)

    def test_verify_suites_pass(self):
        jobs = [
            {"suite": "rank-one-reduction", "g": 2, "d": 3, "l": [4]},
            {"suite": "acyclic-crosscheck", "g": 1, "d": 2},
            {"suite": "manton-nasir", "g": 2, "d": 3},
            {"suite": "splitting-independence", "g": 1, "r": 2, "l": [2, 0], "d": 2},
            {"suite": "degree-integrality", "g": 1, "r": 2, "l": [1, 0], "d": 2},
        ]
        for job in jobs:
            with self.subTest(suite=job["suite"]):
                result = run_job(dict(job, command="verify"))
                self.assertTrue(result.document["verify"]["pass"])
                self.assertEqual(result.plain, f"{job['suite']}: pass")

    def test_verify_plain_verdict(self):
        output = quotvol('verify', suite='rank-one-reduction', g=1, d=2, format='plain')
        self.assertEqual(output.strip(), "rank-one-reduction: pass")


class SweepTests(SimpleTestCase):

    def test_rows_follow_the_ranges(self):
        job = {"command": "sweep", "g_values": [1], "d_values": [0, 1, 2], "r": 2, "l_list": [[0, 0]]}
        rows = json.loads(quotvol(stdin=job))["rows"]
        self.assertEqual([row["d"] for row in rows], [0, 1, 2])
        self.assertEqual(rows[0]["plain"], "1")
        self.assertEqual(rows[2]["volume"]["coefficients"], ["0/1", "-2/3", "1/2"])

    def test_l_total_partitions_agree(self):
        result = sweep({"g_values": [1], "d_values": [2], "r": 2, "l_total": 4})
        rows = result.document["rows"]
        self.assertEqual([row["l"] for row in rows], [[4, 0], [3, 1], [2, 2]])
        self.assertEqual(len({row["plain"] for row in rows}), 1)

    def test_l_list_is_filtered_by_rank(self):
        result = sweep({"g_values": [0], "d_values": [1], "r_values": [1, 2], "l_list": [[1], [1, 0]]})
        self.assertEqual([(row["r"], row["l"]) for row in result.document["rows"]], [(1, [1]), (2, [1, 0])])

    def test_empty_range(self):
        result = sweep({"g_values": [], "d_values": [1], "r": 2, "l_total": 0})
        self.assertEqual(result.document["rows"], [])

    def test_parallel_rows_keep_their_order(self):
        job = {"g_values": [0, 1], "d_values": [1, 2], "r": 2, "l_total": 2}
        self.assertEqual(sweep(job, max_workers=1).document["rows"], sweep(job, max_workers=4).document["rows"])


class ExitCodeTests(SimpleTestCase):

    def test_missing_physical_volume_is_invalid_input(self):
        job = {"command": "quot-volume", "g": 1, "r": 2, "l": [0, 0], "d": 1,
               "t": {"mode": "physical-t", "value": 1}}
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin=job)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertTrue(str(caught.exception).startswith("/t/vol_X: "))

    def test_malformed_json_is_invalid_input(self):
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin="{not json")
        self.assertEqual(caught.exception.returncode, 2)

    def test_malformed_degrees_flag(self):
        with self.assertRaises(CommandError) as caught:
            quotvol('quot-volume', g=1, r=2, l='1,x', d=1)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertTrue(str(caught.exception).startswith("/l: "))

    def test_missing_command(self):
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin={"g": 1})
        self.assertEqual(caught.exception.returncode, 2)
        self.assertTrue(str(caught.exception).startswith("/command: "))

    def test_unsupported_schema(self):
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin={"schema": 2, "command": "quot-volume", "g": 1, "r": 1, "l": [0], "d": 0})
        self.assertTrue(str(caught.exception).startswith("/schema: "))

    def test_verify_weights_of_the_wrong_length(self):
        job = {"command": "verify", "suite": "weight-independence", "g": 1, "r": 2, "l": [0, 0], "d": 1,
               "weights": [[1, 2, 3], [4, 5, 6]]}
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin=job)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertTrue(str(caught.exception).startswith("/weights/0: "))

    def test_verify_degenerate_weights(self):
        job = {"command": "verify", "suite": "weight-independence", "g": 1, "r": 2, "l": [0, 0], "d": 1,
               "weights": [[4, 5], [1, 1]]}
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin=job)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertTrue(str(caught.exception).startswith("/weights/1: "))

    def test_acyclic_pairing_matrix_of_the_wrong_shape(self):
        job = {"command": "acyclic-volume", "n_dim": 1, "q": 1, "deg_E": 0, "pairings": [2, 0], "h": [[0, 1]]}
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin=job)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertTrue(str(caught.exception).startswith("/h: "))

    def test_negative_sweep_total(self):
        job = {"command": "sweep", "g_values": [1], "d_values": [1], "r": 2, "l_total": -1}
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin=job)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertTrue(str(caught.exception).startswith("/l_total: "))

    def test_computation_failure(self):
        job = {"command": "verify", "suite": "weight-independence", "g": 1, "r": 2, "l": [0, 0], "d": 1,
               "weights": [[1, 2]]}
        with self.assertRaises(CommandError) as caught:
            quotvol(stdin=job)
        self.assertEqual(caught.exception.returncode, 3)


class SerializerTests(SimpleTestCase):

    def test_rationals_refuse_floats(self):
        field = RationalField()
        self.assertEqual(field.to_internal_value("22/7").denominator, 7)
        for value in (0.5, True, "1/0", "pi"):
            with self.assertRaises(ValidationError):
                field.to_internal_value(value)

    def test_degrees_must_match_the_rank(self):
        serializer = QuotVolumeSerializer(data={"command": "quot-volume", "g": 1, "r": 2, "l": [1], "d": 1})
        self.assertFalse(serializer.is_valid())
        self.assertIn("l", serializer.errors)

    def test_weights_must_be_distinct(self):
        serializer = QuotVolumeSerializer(data={"command": "quot-volume", "g": 1, "r": 2, "l": [1, 0], "d": 1,
                                                "weights": [[3, "3/1"]]})
        self.assertFalse(serializer.is_valid())
        self.assertEqual(error_pointer(serializer.errors)[0], "/weights/0")

    def test_sweep_normalizes_rank(self):
        serializer = SweepSerializer(data={"command": "sweep", "g_values": [0], "d_values": [1], "r": 2,
                                           "l_total": 1})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data["r_values"], [2])

    @override_settings(QUOTVOL={'SCHEMA_VERSION': 1, 'MAX_WORKERS': 2, 'WEIGHT_SEED': 1,
                                'RANDOM_WEIGHT_BOUND': 40, 'DEFAULT_FORMAT': 'plain'})
    def test_default_format_from_settings(self):
        self.assertEqual(quotvol('quot-volume', g=2, r=2, l='1,1', d=1).strip(), "𝔱 + 2")


class HelperTests(SimpleTestCase):

    def test_splittings(self):
        self.assertEqual(splittings(4, 2), [(4, 0), (3, 1), (2, 2)])
        self.assertEqual(splittings(2, 2, low=-1), [(3, -1), (2, 0), (1, 1)])
        self.assertEqual(splittings(1, 3), [(1, 0, 0)])

    def test_error_pointer(self):
        self.assertEqual(error_pointer({"t": {"vol_X": ["required"]}}), ("/t/vol_X", "required"))
        self.assertEqual(error_pointer({"kappa": [{}, {"coeff": ["bad"]}]}), ("/kappa/1/coeff", "bad"))
        self.assertEqual(error_pointer({"non_field_errors": ["broken"]}), ("/", "broken"))

    def test_empty_input_is_an_empty_document(self):
        self.assertEqual(parse_document(b"  \n"), {})
