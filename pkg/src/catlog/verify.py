"""Cross-checks tying the closed formulas, the series expansions, and the
exhaustive enumerations to each other, grouped into named suites.

Every check is exact; a tolerance would defeat the point. Suites walk a
grid of (k, n) points and report one result per named check per point,
so a single wrong constant anywhere flips the overall verdict.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import catalan, multisets, paths, trees
from . import series as fps
from .arith import factorial
from .errors import DEFAULT_MAX_ENUMERATION


@dataclass(frozen=True)
class CheckResult:
    name: str
    k: int | None
    n: int | None
    passed: bool
    message: str = ""


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    results: tuple[CheckResult, ...]

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "overall": self.overall,
            "points": [
                {
                    "check": r.name,
                    "k": r.k,
                    "n": r.n,
                    "pass": r.passed,
                    "message": r.message,
                }
                for r in self.results
            ],
        }

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            where = " ".join(
                s for s in (f"k={r.k}" if r.k is not None else "",
                            f"n={r.n}" if r.n is not None else "") if s
            )
            status = "ok" if r.passed else "FAIL"
            tail = f" ({r.message})" if r.message and not r.passed else ""
            lines.append(f"[{self.suite}] {r.name} {where}: {status}{tail}")
        verdict = "PASS" if self.overall else "FAIL"
        lines.append(f"suite {self.suite}: {verdict} ({len(self.results)} checks)")
        return "\n".join(lines)


def _check(name, k, n, passed, message="") -> CheckResult:
    return CheckResult(name, k, n, bool(passed), message)


def suite_series(ks, max_n: int) -> list[CheckResult]:
    """Closed coefficient formulas against series computed from scratch."""
    out = []
    for k in ks:
        g = fps.catalan_series(k, max_n)
        one = fps.Series.one(max_n)
        x = fps.Series.x(max_n)
        residual = g - one - x * g**k
        out.append(_check("functional-equation", k, None, residual.is_zero()))
        lg = g.log()
        out.append(_check("log-exp-roundtrip", k, None, lg.exp() == g))
        closure = lg.exp() - one - x * (k * lg).exp()
        out.append(_check("exp-closure", k, None, closure.is_zero()))
        for n in range(1, max_n + 1):
            got, want = lg[n], catalan.coeff_log(k, n)
            out.append(
                _check("log-coefficient", k, n, got == want, f"{want} vs {got}")
            )
            if k >= 2:
                want_cat = catalan.gen_catalan(k, n)
                out.append(
                    _check("series-coefficient", k, n, g[n] == want_cat,
                           f"{want_cat} vs {g[n]}")
                )
        if k >= 2:
            for a in (2, 3):
                powered = lg**a
                for n in range(1, max_n + 1):
                    got = powered[n]
                    want = catalan.coeff_log_power(k, n, a)
                    out.append(
                        _check(f"log-power-{a}-coefficient", k, n, got == want,
                               f"{want} vs {got}")
                    )
    if any(k == 2 for k in ks):
        for n in range(2, max_n + 1):
            harm = catalan.knuth_log2_coeff(n)
            via_returns = catalan.coeff_log_power(2, n, 2)
            general = catalan.knuth_general_log2(2, n)
            out.append(
                _check("log2-harmonic-form", 2, n,
                       harm == via_returns == general,
                       f"{harm} / {via_returns} / {general}")
            )
    return out


@lru_cache(maxsize=128)
def _grid_fields(k: int, n: int, a: int, max_count):
    return tuple(paths.enumerate_fields(k, n, a, max_count))


@lru_cache(maxsize=32)
def _grid_structures(k: int, n: int, max_count):
    all_paths = tuple(paths.enumerate_paths(k, range(1, n + 1), max_count))
    minimal = tuple(p for p in all_paths if paths.is_label_minimal(p))
    ornaments = tuple(paths.enumerate_ornaments(k, n, max_count))
    all_trees = tuple(trees.enumerate_trees(k, range(1, n + 1), max_count))
    min_trees = tuple(t for t in all_trees if trees.is_root_minimal(t))
    cycle_trees = tuple(trees.enumerate_cycle_rooted(k, n, max_count))
    all_ms = tuple(multisets.enumerate_multisets(k, n, False, max_count))
    rooted_ms = tuple(m for m in all_ms if multisets.root_vertices(m))
    return all_paths, minimal, ornaments, all_trees, min_trees, cycle_trees, all_ms, rooted_ms


def suite_counts(ks, max_n: int, max_count=DEFAULT_MAX_ENUMERATION) -> list[CheckResult]:
    """Exhaustive structure counts against the closed counting formulas."""
    out = []
    for k in ks:
        for n in range(1, max_n + 1):
            (all_paths, minimal, ornaments, all_trees, min_trees, cycle_trees,
             all_ms, rooted_ms) = _grid_structures(k, n, max_count)
            n_paths = catalan.count_paths(k, n)
            n_orn = catalan.count_ornaments(k, n)
            n_ms = catalan.count_multisets(k, n)
            out.append(_check("path-count", k, n, len(all_paths) == n_paths,
                              f"{n_paths} vs {len(all_paths)}"))
            out.append(_check("tree-count", k, n, len(all_trees) == n_paths,
                              f"{n_paths} vs {len(all_trees)}"))
            for name, got in (
                ("minimal-path-count", len(minimal)),
                ("ornament-count", len(ornaments)),
                ("minimal-tree-count", len(min_trees)),
                ("cycle-tree-count", len(cycle_trees)),
                ("rooted-multiset-count", len(rooted_ms)),
            ):
                out.append(_check(name, k, n, got == n_orn, f"{n_orn} vs {got}"))
            out.append(_check("multiset-count", k, n, len(all_ms) == n_ms,
                              f"{n_ms} vs {len(all_ms)}"))
            out.append(_check("rooted-fraction", k, n,
                              (k - 1) * len(rooted_ms) == len(all_ms),
                              f"(k-1)*{len(rooted_ms)} vs {len(all_ms)}"))
            total_returns = sum(catalan.returns_count(k, n, p) for p in range(1, n + 1))
            out.append(_check("returns-partition", k, n,
                              total_returns == catalan.gen_catalan(k, n)))
            for a in range(1, min(n, 3) + 1):
                fields = _grid_fields(k, n, a, max_count)
                got = Fraction(len(fields) * factorial(a), factorial(n))
                want = catalan.coeff_log_power(k, n, a)
                out.append(_check(f"field-egf-{a}", k, n, got == want,
                                  f"{want} vs {got}"))
    return out


def suite_bijections(ks, max_n: int, max_count=DEFAULT_MAX_ENUMERATION) -> list[CheckResult]:
    """Roundtrips and range identities for every structure correspondence."""
    out = []
    for k in ks:
        for n in range(1, max_n + 1):
            (all_paths, minimal, ornaments, all_trees, min_trees, cycle_trees,
             all_ms, rooted_ms) = _grid_structures(k, n, max_count)
            rooted_set = set(rooted_ms)

            images = {paths.decompose(p) for p in all_paths}
            out.append(_check(
                "path-field-roundtrip", k, n,
                all(paths.recompose(paths.decompose(p)) == p for p in all_paths)))
            total_fields = sum(
                len(_grid_fields(k, n, a, max_count)) for a in range(1, n + 1)
            )
            out.append(_check("path-field-bijective", k, n,
                              len(images) == len(all_paths) == total_fields,
                              f"{len(all_paths)} paths, {len(images)} images, "
                              f"{total_fields} fields"))

            out.append(_check(
                "tree-forest-roundtrip", k, n,
                all(trees.forest_to_tree(trees.tree_to_forest(t)) == t
                    for t in all_trees)))
            out.append(_check(
                "tree-forest-injective", k, n,
                len({trees.tree_to_forest(t) for t in all_trees}) == len(all_trees)))
            out.append(_check(
                "forest-parts-root-minimal", k, n,
                all(trees.is_root_minimal(part)
                    for t in all_trees for part in trees.tree_to_forest(t).parts)))

            out.append(_check(
                "min-cycle-roundtrip", k, n,
                all(trees.to_root_minimal(trees.to_cycle_rooted(t)) == t
                    for t in min_trees)
                and all(trees.to_cycle_rooted(trees.to_root_minimal(c)) == c
                        for c in cycle_trees)))
            out.append(_check(
                "cycle-length-is-branch-length", k, n,
                all(len(trees.to_cycle_rooted(t).cycle) == len(trees.rightmost_branch(t))
                    for t in min_trees)))

            orn_images = {multisets.ornament_to_multiset(o) for o in ornaments}
            out.append(_check(
                "ornament-multiset-roundtrip", k, n,
                all(multisets.multiset_to_ornament(multisets.ornament_to_multiset(o)) == o
                    for o in ornaments)))
            out.append(_check("ornament-encoding-range", k, n,
                              orn_images == rooted_set,
                              f"{len(orn_images)} images vs {len(rooted_set)} rooted"))

            tree_images = {multisets.cycle_tree_to_multiset(c) for c in cycle_trees}
            out.append(_check(
                "cycle-tree-multiset-roundtrip", k, n,
                all(multisets.multiset_to_cycle_tree(multisets.cycle_tree_to_multiset(c)) == c
                    for c in cycle_trees)))
            out.append(_check("cycle-tree-encoding-range", k, n,
                              tree_images == rooted_set,
                              f"{len(tree_images)} images vs {len(rooted_set)} rooted"))

            out.append(_check(
                "composed-correspondence-roundtrip", k, n,
                all(multisets.cycle_tree_to_ornament(multisets.ornament_to_cycle_tree(o)) == o
                    for o in ornaments)))
            out.append(_check(
                "rotation-class-constant", k, n,
                all(paths.to_ornament(q) == o
                    for o in ornaments for q in paths.rotations(o.rep))))
    return out


def suite_statistics(ks, max_n: int, max_count=DEFAULT_MAX_ENUMERATION) -> list[CheckResult]:
    """Distribution identities: touches, cycle lengths, and root vertices."""
    out = []
    for k in ks:
        for n in range(1, max_n + 1):
            (all_paths, minimal, ornaments, all_trees, min_trees, cycle_trees,
             all_ms, rooted_ms) = _grid_structures(k, n, max_count)
            expected = {
                p: factorial(n) * catalan.returns_count(k, n, p) // p
                for p in range(1, n + 1)
            }
            expected = {p: c for p, c in expected.items() if c}
            touch_dist = dict(Counter(paths.touch_count(o) for o in ornaments))
            cycle_dist = dict(Counter(len(c.cycle) for c in cycle_trees))
            out.append(_check("touch-distribution", k, n, touch_dist == expected,
                              f"{expected} vs {touch_dist}"))
            out.append(_check("cycle-length-distribution", k, n,
                              cycle_dist == expected, f"{expected} vs {cycle_dist}"))
            word_dist: Counter = Counter()
            for p in all_paths:
                word_dist[len(paths.diagonal_touches(p))] += 1
            labeled_expected = {p: factorial(n) * catalan.returns_count(k, n, p)
                                for p in range(1, n + 1)}
            labeled_expected = {p: c for p, c in labeled_expected.items() if c}
            out.append(_check("labeled-touch-distribution", k, n,
                              dict(word_dist) == labeled_expected))
            out.append(_check(
                "ornament-root-vertices", k, n,
                all(multisets.root_vertices(multisets.ornament_to_multiset(o))
                    == {lab for _, lab in paths.diagonal_touches(o.rep)}
                    for o in ornaments)))
            out.append(_check(
                "cycle-tree-root-vertices", k, n,
                all(multisets.root_vertices(multisets.cycle_tree_to_multiset(c))
                    == set(c.cycle)
                    for c in cycle_trees)))
            out.append(_check(
                "touch-labels-become-roots", k, n,
                all(set(multisets.ornament_to_cycle_tree(o).cycle)
                    == {lab for _, lab in paths.diagonal_touches(o.rep)}
                    for o in ornaments)))
    return out


SUITES = {
    "series": suite_series,
    "counts": suite_counts,
    "bijections": suite_bijections,
    "statistics": suite_statistics,
}


def run_suite(
    suite: str, ks, max_n: int, max_count=DEFAULT_MAX_ENUMERATION
) -> VerificationReport:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    ks = sorted(set(ks))
    if not ks or any(k < 1 for k in ks):
        raise ValueError("k values must be >= 1")
    if suite not in ("series", "all") and any(k < 2 for k in ks):
        raise ValueError(f"suite {suite!r} works on structures and needs k >= 2")
    if suite == "all":
        results: list[CheckResult] = []
        results += suite_series(ks, max_n)
        structural = [k for k in ks if k >= 2]
        if structural:
            for fn in (suite_counts, suite_bijections, suite_statistics):
                results += fn(structural, max_n, max_count)
        return VerificationReport("all", tuple(results))
    if suite == "series":
        return VerificationReport(suite, tuple(suite_series(ks, max_n)))
    return VerificationReport(suite, tuple(SUITES[suite](ks, max_n, max_count)))
