"""Conjecture checkers and fixture comparison.

Every check returns a CheckReport; failing reports always carry a witness
naming the first offending coefficient.  Finite-order conjecture checks are
"pass through order N" statements, never proofs.
"""

import fnmatch
import json
import os
from dataclasses import dataclass
from importlib import resources

from .amplitude import AmplitudeSpec, closed_amplitude, normalize, open_amplitude
from .partitions import parse_partition
from .ring import ExpansionError, KahlerSeries, QSeries, RF_ZERO, expand, rf_equal


@dataclass
class CheckReport:
    check_id: str
    verdict: str                 # pass | fail | inconclusive
    witness: str | None = None
    detail: str = ""

    def to_json(self):
        out = {"check_id": self.check_id, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


def _graded(determined):
    return sorted(determined, key=lambda rs: (rs[0] + rs[1], rs))


def positivity_check(series, q_order, refined, check_id="positivity"):
    """Expand every determined coefficient and demand nonnegative integer
    entries; one-parameter mode additionally demands no second variable."""
    for rs in _graded(series.determined):
        rf = series.coeffs.get(rs)
        if rf is None:
            continue
        try:
            ser = expand(rf, q_order)
        except ExpansionError as err:
            return CheckReport(check_id, "inconclusive",
                               witness=f"coefficient {rs}: {err}")
        bad = ser.first_violation()
        if bad is not None:
            qe, te, c = bad
            return CheckReport(
                check_id, "fail",
                witness=f"coefficient {rs}: q^{qe / 2:g} t^{te / 2:g} entry {c}")
        if not refined and ser.max_other_exp() not in (None, 0):
            return CheckReport(
                check_id, "fail",
                witness=f"coefficient {rs}: second variable survives one-parameter mode")
    return CheckReport(check_id, "pass",
                       detail=f"through q-order {q_order} at cutoff {series.cutoff}")


def support_check(zhat, alpha, gamma, check_id="support"):
    """Nonzero coefficients of the normalized series must sit at r >= 1 and
    either within total degree |alpha|+|gamma| or at positive fiber degree;
    the degree-(0,0) leading term is exempt."""
    bound = alpha.size + gamma.size
    for rs in _graded(zhat.determined):
        if rs == (0, 0):
            continue
        rf = zhat.coeffs.get(rs)
        if rf is None or rf.is_zero():
            continue
        r, s = rs
        if r < 1 or (r + s > bound and s == 0):
            return CheckReport(check_id, "fail",
                               witness=f"nonzero coefficient at {rs} outside support")
    return CheckReport(check_id, "pass", detail=f"within cutoff {zhat.cutoff}")


def reduction_check(refined_series, regular_series, check_id="reduction"):
    """Refined series at equal parameters must match the one-parameter one."""
    if refined_series.cutoff != regular_series.cutoff:
        raise ValueError("mismatched cutoffs")
    reduced = refined_series.substitute_t_eq_q()
    bad = reduced.equal_through(regular_series, regular_series.cutoff)
    if bad is not None:
        return CheckReport(check_id, "fail",
                           witness=f"coefficient {bad} differs at equal parameters")
    return CheckReport(check_id, "pass", detail=f"through degree {regular_series.cutoff}")


def symmetry_check_tq(series, check_id="symmetry"):
    """Exchange the two parameters everywhere and compare."""
    swapped = series.swap_qt()
    bad = swapped.equal_through(series, series.cutoff)
    if bad is not None:
        return CheckReport(check_id, "fail",
                           witness=f"coefficient {bad} changes under the exchange")
    return CheckReport(check_id, "pass", detail=f"through degree {series.cutoff}")


def fixture_compare(fixture, computed, check_id=None):
    """Bit-exact comparison of a computed series against one fixture."""
    check_id = check_id or f"fixture:{fixture['id']}"
    if fixture["kind"] == "kahler":
        expected = KahlerSeries.from_json(fixture["expected"])
        for rs in _graded(expected.determined):
            if not computed.is_determined(*rs):
                return CheckReport(check_id, "fail",
                                   witness=f"coefficient {rs} not determined")
            if not rf_equal(computed.coeff(*rs), expected.coeffs.get(rs, RF_ZERO)):
                return CheckReport(check_id, "fail",
                                   witness=f"coefficient {rs} differs")
        return CheckReport(check_id, "pass",
                           detail=f"{len(expected.determined)} coefficients, cutoff {expected.cutoff}")
    if fixture["kind"] == "qexp":
        expected = QSeries.from_json(fixture["expected"])
        r, s = fixture["spec"]["coeff"]
        if not computed.is_determined(r, s):
            return CheckReport(check_id, "fail",
                               witness=f"coefficient ({r},{s}) not determined")
        rf = computed.coeffs.get((r, s), RF_ZERO)
        if rf.is_zero():
            return CheckReport(check_id, "fail",
                               witness=f"coefficient ({r},{s}) is zero")
        try:
            ser = expand(rf, expected.order // 2)
        except ExpansionError as err:
            return CheckReport(check_id, "inconclusive",
                               witness=f"coefficient ({r},{s}): {err}")
        for qe in range(0, expected.order + 1):
            if ser.coeffs.get(qe, {}) != expected.coeffs.get(qe, {}):
                return CheckReport(check_id, "fail",
                                   witness=f"({r},{s}): q^{qe / 2:g} row differs")
        return CheckReport(check_id, "pass",
                           detail=f"residual through q^{expected.order // 2}")
    raise ValueError(f"unknown fixture kind {fixture['kind']!r}")


# -- fixture loading ---------------------------------------------------------

def fixtures_dir_default():
    env = os.environ.get("RP3VERTEX_FIXTURES")
    if env:
        return env
    return str(resources.files("rp3vertex") / "fixtures")


def load_fixtures(fixtures_dir=None):
    path = fixtures_dir or fixtures_dir_default()
    out = []
    for name in sorted(os.listdir(path)):
        if name.endswith(".json"):
            with open(os.path.join(path, name)) as fh:
                out.append(json.load(fh))
    if not out:
        raise FileNotFoundError(f"no fixture files under {path}")
    return out


# -- the suite ---------------------------------------------------------------

CONJECTURE_COLORS = [
    ("[1]", "[]"), ("[1,1]", "[]"), ("[1,1,1]", "[]"),
    ("[2]", "[]"), ("[3]", "[]"),
    ("[1]", "[1]"), ("[1]", "[1,1]"),
]


@dataclass
class SuiteEntry:
    report: CheckReport
    expected: str = "pass"

    @property
    def ok(self):
        return self.report.verdict == self.expected


class SuiteRunner:
    """Runs the fixture and conjecture checks with shared amplitude caching."""

    def __init__(self, fixtures_dir=None, q_order=20, deep_cutoff=4):
        self.fixtures = load_fixtures(fixtures_dir)
        self.q_order = q_order
        self.deep_cutoff = deep_cutoff
        self._open = {}
        self._closed = {}

    def _closed_series(self, geometry, refined, cutoff):
        key = (geometry, refined, cutoff)
        if key not in self._closed:
            self._closed[key] = closed_amplitude(refined, cutoff, geometry)
        return self._closed[key]

    def _open_series(self, geometry, alpha, gamma, refined, cutoff):
        key = (geometry, alpha, gamma, refined, cutoff)
        if key not in self._open:
            spec = AmplitudeSpec(geometry=geometry,
                                 alpha=parse_partition(alpha),
                                 gamma=parse_partition(gamma),
                                 refined=refined, cutoff=cutoff)
            self._open[key] = open_amplitude(spec)
        return self._open[key]

    def series_for(self, spec, cutoff=None):
        geometry = spec.get("geometry", "local_p1xp1")
        cutoff = cutoff if cutoff is not None else spec["cutoff"]
        refined = spec["refined"]
        raw = self._open_series(geometry, spec["alpha"], spec["gamma"], refined, cutoff)
        if spec.get("normalized", True):
            return normalize(raw, self._closed_series(geometry, refined, cutoff))
        return raw

    def run(self, pattern=None):
        entries = []
        for fx in self.fixtures:
            computed = self.series_for(fx["spec"])
            entries.append(SuiteEntry(fixture_compare(fx, computed)))

        d = self.deep_cutoff
        for alpha, gamma in CONJECTURE_COLORS:
            tag = f"{alpha}{gamma}"
            for refined in (False, True):
                mode = "refined" if refined else "regular"
                spec = {"alpha": alpha, "gamma": gamma, "refined": refined,
                        "cutoff": d, "normalized": True}
                zhat = self.series_for(spec)
                entries.append(SuiteEntry(positivity_check(
                    zhat, self.q_order, refined, f"positivity:{tag}:{mode}")))
                entries.append(SuiteEntry(support_check(
                    zhat, parse_partition(alpha), parse_partition(gamma),
                    f"support:{tag}:{mode}")))
            refined_s = self.series_for({"alpha": alpha, "gamma": gamma,
                                         "refined": True, "cutoff": d})
            regular_s = self.series_for({"alpha": alpha, "gamma": gamma,
                                         "refined": False, "cutoff": d})
            entries.append(SuiteEntry(reduction_check(
                refined_s, regular_s, f"reduction:{tag}")))

        closed_ref = self._closed_series("local_p1xp1", True, 3)
        entries.append(SuiteEntry(symmetry_check_tq(closed_ref, "symmetry:closed")))
        open_ref = self.series_for({"alpha": "[1]", "gamma": "[]", "refined": True,
                                    "cutoff": 3})
        entries.append(SuiteEntry(
            symmetry_check_tq(open_ref, "symmetry:open_fundamental"),
            expected="fail"))

        entries.extend(self._structure_checks())
        entries.extend(self._comparison_checks())

        if pattern:
            entries = [e for e in entries
                       if fnmatch.fnmatch(e.report.check_id, pattern)]
        return entries

    def _structure_checks(self):
        """The pure-base truncation and no-pure-fiber observations."""
        out = []
        cases = [("[1]", "[]", 2), ("[1,1]", "[]", 3), ("[1]", "[1]", 3)]
        for alpha, gamma, start in cases:
            for refined in (False, True):
                mode = "refined" if refined else "regular"
                zhat = self.series_for({"alpha": alpha, "gamma": gamma,
                                        "refined": refined, "cutoff": self.deep_cutoff})
                tag = f"{alpha}{gamma}:{mode}"
                witness = None
                for r in range(start, self.deep_cutoff + 1):
                    if not zhat.coeffs.get((r, 0), RF_ZERO).is_zero():
                        witness = f"nonzero pure-base coefficient at ({r},0)"
                        break
                out.append(SuiteEntry(CheckReport(
                    f"structure:pure_base:{tag}",
                    "fail" if witness else "pass", witness=witness)))
                witness = None
                for s in range(1, self.deep_cutoff + 1):
                    if not zhat.coeffs.get((0, s), RF_ZERO).is_zero():
                        witness = f"nonzero pure-fiber coefficient at (0,{s})"
                        break
                out.append(SuiteEntry(CheckReport(
                    f"structure:no_pure_fiber:{tag}",
                    "fail" if witness else "pass", witness=witness)))
        return out

    def _comparison_checks(self):
        """Cross-geometry Hopf comparison: equal leading, opposite first base
        coefficient, genuinely different second one."""
        out = []
        local = self.series_for({"alpha": "[1]", "gamma": "[1]", "refined": False,
                                 "cutoff": 3})
        con = self._open_series("resolved_conifold", "[1]", "[1]", False, 3)
        con_hat = normalize(con, self._closed_series("resolved_conifold", False, 3))

        checks = [
            ("comparison:leading", rf_equal(con_hat.coeff(0, 0), local.coeff(0, 0)),
             "leading coefficients differ"),
            ("comparison:first_base",
             rf_equal(con_hat.coeff(1, 0), -local.coeff(1, 0)),
             "first base coefficients are not opposite"),
            ("comparison:second_base",
             not rf_equal(con_hat.coeff(2, 0), local.coeff(2, 0)),
             "second base coefficients coincide"),
        ]
        for cid, ok, msg in checks:
            out.append(SuiteEntry(CheckReport(
                cid, "pass" if ok else "fail", witness=None if ok else msg)))
        return out


def summary_table(entries):
    lines = []
    width = max(len(e.report.check_id) for e in entries) + 2
    for e in entries:
        mark = "ok " if e.ok else "BAD"
        expected = "" if e.expected == "pass" else f" (expected {e.expected})"
        extra = e.report.witness or e.report.detail
        lines.append(f"{mark} {e.report.check_id:<{width}} {e.report.verdict}{expected}"
                     + (f"  {extra}" if extra else ""))
    good = sum(1 for e in entries if e.ok)
    lines.append(f"{good}/{len(entries)} checks as expected")
    return "\n".join(lines)
