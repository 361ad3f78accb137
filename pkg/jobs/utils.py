from io import BytesIO
from math import factorial

import sympy
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from scalars.utils import rational_string

TTILDE_SYMBOL = sympy.Symbol(r'\mathfrak{t}')


def volume_document(poly):
    '''
    Ascending coefficient list: entry k is the coefficient of 𝔱^k (empty for the zero polynomial)
    '''
    return {"variable": "ttilde", "coefficients": poly.as_strings()}


def to_sympy(poly, symbol=TTILDE_SYMBOL):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * symbol ** k for k, c in enumerate(poly.coefficients)),
        sympy.Integer(0))


def render_latex(poly):
    '''
    LaTeX in descending powers of \\mathfrak{t}, fractions as \\frac
    '''
    return sympy.latex(to_sympy(poly), order='lex')


def render_plain(poly):
    return str(poly)


def ttilde_from_physical(n_dim, vol_X, t, pi):
    '''
    𝔱 = (n - 1)! Vol(X) t / 2π, where pi is a rational probe or sympy.pi
    '''
    if isinstance(pi, sympy.Basic):
        return sympy.factorial(n_dim - 1) * sympy.Rational(vol_X.numerator, vol_X.denominator) \
            * sympy.Rational(t.numerator, t.denominator) / (2 * pi)
    return factorial(n_dim - 1) * vol_X * t / (2 * pi)


def unnormalized_factor(dimension, pi):
    '''
    (4π²)^dimension, the factor between the normalized and the ω_t volume
    '''
    return (4 * pi ** 2) ** dimension


def evaluation_document(poly, t_spec, n_dim, dimension):
    '''
    Evaluation block for the ttilde-value and physical-t modes, None when 𝔱 stays symbolic
    '''
    mode = t_spec.get("mode", "ttilde-symbolic")
    if mode == "ttilde-symbolic":
        return None
    if mode == "ttilde-value":
        ttilde = t_spec["value"]
        return {
            "mode": mode,
            "ttilde": rational_string(ttilde),
            "value": rational_string(poly(ttilde)),
            "exact": True,
        }

    t, vol_X = t_spec["value"], t_spec["vol_X"]
    if "pi_probe" in t_spec:
        pi = t_spec["pi_probe"]
        ttilde = ttilde_from_physical(n_dim, vol_X, t, pi)
        value = poly(ttilde)
        return {
            "mode": mode,
            "pi": "probe",
            "pi_probe": rational_string(pi),
            "t": rational_string(t),
            "vol_X": rational_string(vol_X),
            "ttilde": rational_string(ttilde),
            "value": rational_string(value),
            "unnormalized": rational_string(unnormalized_factor(dimension, pi) * value),
            "exact": False,
        }

    ttilde = ttilde_from_physical(n_dim, vol_X, t, sympy.pi)
    value = sympy.expand(to_sympy(poly).subs(TTILDE_SYMBOL, ttilde))
    unnormalized = sympy.expand(unnormalized_factor(dimension, sympy.pi) * value)
    return {
        "mode": mode,
        "pi": "symbolic",
        "t": rational_string(t),
        "vol_X": rational_string(vol_X),
        "ttilde": str(ttilde),
        "ttilde_latex": sympy.latex(ttilde),
        "value": str(value),
        "value_latex": sympy.latex(value),
        "unnormalized": str(unnormalized),
        "exact": False,
    }


def parse_document(raw):
    '''
    Parses a JSON job document from bytes or text; an empty input is an empty document
    '''
    if isinstance(raw, str):
        raw = raw.encode('utf-8')
    if not raw.strip():
        return {}
    return JSONParser().parse(BytesIO(raw))


def render_document(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')


def error_pointer(detail, path=""):
    '''
    Returns (pointer, message) for the first error in a DRF ValidationError detail,
    e.g. ("/t/vol_X", "This field is required for mode physical-t.")
    '''
    if isinstance(detail, dict):
        for key, value in detail.items():
            if value in ({}, [], None):
                continue
            segment = "" if key == "non_field_errors" else f"/{key}"
            return error_pointer(value, path + segment)
    elif isinstance(detail, list):
        if detail and all(isinstance(item, str) for item in detail):
            return path or "/", str(detail[0])
        for index, value in enumerate(detail):
            if value in ({}, [], None):
                continue
            return error_pointer(value, f"{path}/{index}")
    return path or "/", str(detail)
