'''
Runs validated job documents against the computation apps and builds result documents.
'''
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from django.conf import settings
from rest_framework import serializers
from rest_framework.exceptions import APIException

from abelian.problems import AcyclicData, CurveQuotProblem
from abelian.volumes import (
    acyclic_volume,
    acyclicity_warnings,
    curve_acyclic_data,
    manton_nasir_check,
    symmetric_power_volume,
)
from exterior.alternating import AltForm
from grothendieck.embedding import embedding_params, embedding_warnings, grothendieck_degree
from grothendieck.exceptions import DegreeIntegralityException
from localization.problems import QuotProblem, WeightVector
from localization.volumes import quot_volume, verify_weight_independence
from scalars.utils import rational_string

from .exceptions import InternalComputationException
from .serializers import COMMAND_SERIALIZERS, JobSpecSerializer
from .utils import evaluation_document, render_latex, render_plain, volume_document

logger = logging.getLogger(__name__)

DEFAULT_PI_PROBES = (Fraction(3), Fraction(22, 7), Fraction(355, 113), Fraction(-5, 2), Fraction(1, 9))
DEFAULT_VOL_X = Fraction(17, 3)


def splittings(total, r, low=0):
    '''
    Non-increasing r-tuples of integers >= low summing to total, in descending lexicographic order
    '''
    if r == 1:
        return [(total,)] if total >= low else []
    result = []
    for first in range(total - (r - 1) * low, low - 1, -1):
        for rest in splittings(total - first, r - 1, low):
            if rest[0] <= first:
                result.append((first,) + rest)
    return result


class JobDispatcher:
    '''
    Validates a job document with the serializer of its command and runs it.

    Each command has a perform_<command> method returning the command specific part of the
    result document together with the polynomial used by the latex and plain renderings.
    '''
    serializer_classes = COMMAND_SERIALIZERS

    def __init__(self, max_workers=None):
        if max_workers is None:
            max_workers = settings.QUOTVOL['MAX_WORKERS']
        self.max_workers = max(1, int(max_workers))

    def get_serializer_class(self, command):
        return self.serializer_classes[command]

    def validate(self, document):
        if not isinstance(document, dict):
            raise serializers.ValidationError({"non_field_errors": ["A job document must be a JSON object."]})
        # The command has to be known before the command specific serializer can be chosen
        head = JobSpecSerializer(data={"command": document.get("command"), "schema": document.get("schema", 1)})
        head.is_valid(raise_exception=True)
        serializer = self.get_serializer_class(head.validated_data["command"])(data=document)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def run(self, document, timing=False):
        spec = self.validate(document)
        command = spec["command"]
        started = time.perf_counter()
        try:
            result = getattr(self, "perform_" + command.replace("-", "_"))(spec)
        except APIException:
            raise
        except Exception:
            logger.exception("unexpected failure while running %s", command)
            raise InternalComputationException()
        elapsed = time.perf_counter() - started
        logger.info("%s finished in %.3fs", command, elapsed)

        output = {"schema": settings.QUOTVOL['SCHEMA_VERSION'], "input": document}
        output.update(result.document)
        output["warnings"] = result.warnings
        if timing:
            output["timing"] = {"seconds": f"{elapsed:.6f}"}
        return JobResult(document=output, spec=spec, poly=result.poly, plain=result.plain, latex=result.latex)

    # Helpers

    def _volume_part(self, poly, spec, n_dim, dimension):
        document = {"volume": volume_document(poly), "latex": render_latex(poly)}
        evaluation = evaluation_document(poly, spec.get("t", {}), n_dim, dimension)
        if evaluation is not None:
            document["evaluation"] = evaluation
        return document

    def _quot_problem(self, spec):
        return QuotProblem(g=spec["g"], r=spec["r"], l=tuple(spec["l"]), d=spec["d"])

    def _weights(self, spec):
        weights = spec.get("weights")
        if not weights:
            return None
        return WeightVector(tuple(weights[0]))

    # Commands

    def perform_abelian_volume(self, spec):
        problem = CurveQuotProblem(g=spec["g"], deg_E=spec["deg_E"], d=spec["d"])
        poly = symmetric_power_volume(problem)
        return PartialResult(self._volume_part(poly, spec, 1, problem.d), poly)

    def perform_acyclic_volume(self, spec):
        warnings = []
        if "curve" in spec:
            curve = spec["curve"]
            warnings = acyclicity_warnings(spec["g"], curve["r0"], curve["deg_E0"], curve["m"])
            data = curve_acyclic_data(spec["g"], curve["r0"], curve["deg_E0"], curve["m"])
        else:
            q = spec["q"]
            try:
                kappa = {
                    (entry["i"], entry["s"]): AltForm(q, {tuple(term["indices"]): term["coeff"] for term in entry["terms"]})
                    for entry in spec.get("kappa", [])
                }
            except ValueError as error:
                raise serializers.ValidationError({"kappa": [str(error)]})
            data = AcyclicData(n=spec["n_dim"], q=q, deg_E=spec["deg_E"], pairings=tuple(spec["pairings"]),
                               h=spec["h"], kappa_forms=kappa)
        poly = acyclic_volume(data)
        document = self._volume_part(poly, spec, data.n, data.dimension)
        document["rank"] = data.rank
        document["dimension"] = data.dimension
        return PartialResult(document, poly, warnings)

    def perform_quot_volume(self, spec):
        problem = self._quot_problem(spec)
        poly = quot_volume(problem, self._weights(spec), max_workers=self.max_workers)
        return PartialResult(self._volume_part(poly, spec, 1, problem.dimension), poly)

    def perform_grothendieck_degree(self, spec):
        problem = self._quot_problem(spec)
        n = spec["n"]
        poly = quot_volume(problem, self._weights(spec), max_workers=self.max_workers)
        degree = grothendieck_degree(problem, n, volume=poly)
        params = embedding_params(problem, n)
        document = self._volume_part(poly, spec, 1, problem.dimension)
        document["degree"] = str(degree)
        document["embedding"] = {
            "n": params.n,
            "s": params.s,
            "sections_dimension": params.sections_dimension,
            "ambient_dimension": params.ambient_dimension,
        }
        return PartialResult(document, poly, embedding_warnings(problem, n), plain=str(degree))

    def perform_verify(self, spec):
        suite = spec["suite"]
        report = getattr(self, "verify_" + suite.replace("-", "_"))(spec)
        verdict = "pass" if report["pass"] else "fail"
        return PartialResult({"verify": dict(suite=suite, **report)}, None, plain=f"{suite}: {verdict}")

    def perform_sweep(self, spec):
        problems = []
        for g in spec["g_values"]:
            for r in spec["r_values"]:
                for d in spec["d_values"]:
                    if "l_list" in spec:
                        candidates = [tuple(l) for l in spec["l_list"] if len(l) == r]
                    else:
                        candidates = splittings(spec["l_total"], r)
                    problems.extend(QuotProblem(g=g, r=r, l=l, d=d) for l in candidates)

        def row(problem):
            poly = quot_volume(problem, max_workers=1)
            return {
                "g": problem.g,
                "r": problem.r,
                "d": problem.d,
                "l": list(problem.l),
                "volume": volume_document(poly),
                "plain": render_plain(poly),
                "latex": render_latex(poly),
            }

        if self.max_workers > 1 and len(problems) > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                rows = list(executor.map(row, problems))
        else:
            rows = [row(problem) for problem in problems]

        plain = "\n".join(f"g={r['g']}\tr={r['r']}\td={r['d']}\tl={r['l']}\t{r['plain']}" for r in rows)
        latex = "\n".join(r["latex"] for r in rows)
        return PartialResult({"rows": rows}, None, plain=plain, latex=latex)

    # Verification suites

    def verify_weight_independence(self, spec):
        problem = self._quot_problem(spec)
        weights = [WeightVector(tuple(w)) for w in spec["weights"]] if spec.get("weights") else None
        report = verify_weight_independence(problem, weights, max_workers=self.max_workers)
        return {
            "pass": report.passed,
            "candidates": report.candidates,
            "volumes": [
                {"weights": w.as_strings(), "volume": volume_document(poly)} for w, poly in report.volumes
            ],
        }

    def verify_rank_one_reduction(self, spec):
        l = spec.get("l", [0])[0]
        problem = QuotProblem(g=spec["g"], r=1, l=(l,), d=spec["d"])
        localized = quot_volume(problem, max_workers=self.max_workers)
        closed = symmetric_power_volume(CurveQuotProblem(g=spec["g"], deg_E=problem.deg_E, d=spec["d"]))
        return {
            "pass": localized == closed,
            "localization": volume_document(localized),
            "symmetric_power": volume_document(closed),
        }

    def verify_acyclic_crosscheck(self, spec):
        g, d = spec["g"], spec["d"]
        deg_E0 = spec.get("deg_E0", 0)
        m = deg_E0 - d
        data = curve_acyclic_data(g, 1, deg_E0, m)
        acyclic = acyclic_volume(data)
        closed = symmetric_power_volume(CurveQuotProblem(g=g, deg_E=m, d=d))
        return {
            "pass": acyclic == closed,
            "acyclic": volume_document(acyclic),
            "symmetric_power": volume_document(closed),
        }

    def verify_manton_nasir(self, spec):
        vol_X = spec.get("vol_X", DEFAULT_VOL_X)
        probes = spec.get("pi_probes") or DEFAULT_PI_PROBES
        checks = [manton_nasir_check(spec["g"], spec["d"], vol_X, pi) for pi in probes]
        return {
            "pass": all(check.holds for check in checks),
            "probes": [
                {
                    "pi": rational_string(pi),
                    "unnormalized": rational_string(check.unnormalized),
                    "manton_nasir": rational_string(check.manton_nasir),
                    "expected_ratio": rational_string(check.expected_ratio),
                }
                for pi, check in zip(probes, checks)
            ],
        }

    def verify_splitting_independence(self, spec):
        r, total = spec["r"], sum(spec["l"])
        low = total // r - 2
        candidates = [s for s in splittings(total, r, low) if max(s) <= -(-total // r) + 2]
        volumes = [(s, quot_volume(QuotProblem(g=spec["g"], r=r, l=s, d=spec["d"]), max_workers=self.max_workers))
                   for s in candidates]
        return {
            "pass": all(poly == volumes[0][1] for _, poly in volumes),
            "splittings": [{"l": list(s), "volume": volume_document(poly)} for s, poly in volumes],
        }

    def verify_degree_integrality(self, spec):
        problem = self._quot_problem(spec)
        poly = quot_volume(problem, max_workers=self.max_workers)
        start = spec.get("n", problem.g + problem.d + 2)
        degrees = []
        passed = True
        for n in range(start, start + 5):
            try:
                degree = grothendieck_degree(problem, n, volume=poly)
            except DegreeIntegralityException as error:
                passed = False
                degrees.append({"n": n, "error": str(error.detail)})
                continue
            passed = passed and degree >= 0
            degrees.append({"n": n, "degree": str(degree)})
        return {"pass": passed, "degrees": degrees}


class PartialResult:
    def __init__(self, document, poly, warnings=None, plain=None, latex=None):
        self.document = document
        self.poly = poly
        self.warnings = list(warnings or [])
        self.plain = plain if plain is not None else (render_plain(poly) if poly is not None else "")
        self.latex = latex if latex is not None else (render_latex(poly) if poly is not None else "")


class JobResult:
    def __init__(self, document, spec, poly, plain, latex):
        self.document = document
        self.spec = spec
        self.poly = poly
        self.plain = plain
        self.latex = latex


def run_job(document, max_workers=None, timing=False):
    return JobDispatcher(max_workers=max_workers).run(document, timing=timing)


def sweep(document, max_workers=None, timing=False):
    document = dict(document, command="sweep")
    return run_job(document, max_workers=max_workers, timing=timing)
