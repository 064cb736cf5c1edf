"""Verification suites run by the ``verify`` command and the acceptance tests.

A suite expands into independent tasks; each task returns a list of Check
records. Tasks are plain (function name, arguments) pairs so they can be sent
to a process pool, and results are always reported in task order.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import factorial
from typing import NamedTuple

from . import reference as ref
from .bratteli import check_product_dimension, square_sum_recursion, young_graph_power
from .combinatorics import (
    MPartition, dim_mpartition, is_content_string, mpartitions, standard_tableaux, string_to_tableau,
)
from .forms import (
    KINDS, gram_matrix, verify_invariance, verify_neighbor_ratio, verify_omega_stable,
    verify_orthogonality_squared,
)
from .matrix import matrix_rank
from .repn import (
    build_representation, commutant_dimension, direct_sum, idempotent, verify_baxter_identities,
    verify_defining_relations, verify_idempotents, verify_intertwiners, verify_jm_spectrum,
    verify_restriction, verify_vacuum_isomorphism, word_trace,
)
from .scalar import ParamSpec
from .smash import (
    build_tensor_module, decompose, expected_decomposition, subspace_action,
    verify_restriction_compatibility,
)

SUITES = ("relations", "gram", "baxter", "spectrum", "idempotents", "dimensions",
          "irreducibility", "appendixA", "appendixC")


class Check(NamedTuple):
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status} [{self.suite}] {self.name}{tail}"


def default_spec(m: int) -> ParamSpec:
    """q = 2 with v = (1, 3, 5, ...): generic for every size used here."""
    return ParamSpec(2, tuple(2 * k + 1 for k in range(m)))


def _shapes(m: int, max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from mpartitions(m, n)


def _spec_from(args):
    return None if args is None else ParamSpec(args[0], tuple(args[1]))


def _rep_check(suite, shape_text, spec_args, fn, label):
    shape = MPartition.parse(shape_text)
    rep = build_representation(shape, _spec_from(spec_args))
    rep_ok = fn(rep)
    return [Check(suite, f"{label} {shape_text}", bool(rep_ok), "" if rep_ok else str(rep_ok))]


# task bodies ----------------------------------------------------------------

def task_relations(shape_text, spec_args):
    out = _rep_check("relations", shape_text, spec_args, verify_defining_relations, "defining relations")
    r = verify_vacuum_isomorphism(MPartition.parse(shape_text), _spec_from(spec_args))
    out.append(Check("relations", f"vacuum change of basis {shape_text}", bool(r), "" if r else str(r)))
    return out


def task_gram(shape_text, spec_args):
    shape = MPartition.parse(shape_text)
    spec = _spec_from(spec_args)
    rep = build_representation(shape, spec)
    G = gram_matrix(shape, spec)
    out = []
    for kind in KINDS:
        r = verify_invariance(rep, G, kind)
        out.append(Check("gram", f"{kind} {shape_text}", bool(r), "" if r else str(r)))
    r = verify_orthogonality_squared(rep, G)
    out.append(Check("gram", f"orthogonality {shape_text}", bool(r), "" if r else str(r)))
    r = verify_neighbor_ratio(G)
    out.append(Check("gram", f"neighbor ratio {shape_text}", bool(r), "" if r else str(r)))
    if spec is None:
        out.append(Check("gram", f"omega-stable {shape_text}", verify_omega_stable(G)))
    return out


def task_baxter(shape_text, spec_args):
    return _rep_check("baxter", shape_text, spec_args, verify_baxter_identities, "baxter identities")


def task_spectrum(shape_text, spec_args):
    shape = MPartition.parse(shape_text)
    rep = build_representation(shape, _spec_from(spec_args))
    out = []
    for name, fn in (("jm diagonal", verify_jm_spectrum), ("intertwiners", verify_intertwiners),
                     ("restriction", verify_restriction)):
        r = fn(rep)
        out.append(Check("spectrum", f"{name} {shape_text}", bool(r), "" if r else str(r)))
    return out


def task_content_strings(m, n):
    seen = {}
    bad = ""
    for shape in mpartitions(m, n):
        for t in standard_tableaux(shape):
            s = t.content_string()
            chk = is_content_string(s, m)
            if not chk:
                bad = f"{t.to_text()} fails {chk.condition}"
                break
            if s in seen:
                bad = f"{t.to_text()} and {seen[s].to_text()} share a content string"
                break
            if string_to_tableau(s, m) != t:
                bad = f"{t.to_text()} does not round trip"
                break
            seen[s] = t
        if bad:
            break
    return [Check("spectrum", f"content strings m={m} n={n}", not bad, bad or f"{len(seen)} tableaux")]


def task_idempotents(shape_text, spec_args):
    """E_X on its own representation, and rank 0 on every other shape of the same size."""
    shape = MPartition.parse(shape_text)
    spec = _spec_from(spec_args)
    rep = build_representation(shape, spec)
    out = []
    r = verify_idempotents(rep)
    out.append(Check("idempotents", f"matrix units and completeness {shape_text}", bool(r), "" if r else str(r)))
    bad = ""
    for other in mpartitions(shape.m, shape.size):
        if other == shape:
            continue
        orep = build_representation(other, spec)
        memo: dict = {}
        for t in standard_tableaux(shape):
            if not idempotent(t, orep, memo).is_zero():
                bad = f"E_X for {t.to_text()} is nonzero on {other.to_text()}"
                break
        if bad:
            break
    out.append(Check("idempotents", f"vanish on other shapes {shape_text}", not bad, bad))
    ranks = {matrix_rank(idempotent(t, rep)) for t in standard_tableaux(shape)} if spec else {1}
    out.append(Check("idempotents", f"rank one {shape_text}", ranks == {1}, "" if ranks == {1} else str(ranks)))
    return out


def task_dimensions(m, n):
    total = sum(dim_mpartition(lam) ** 2 for lam in mpartitions(m, n))
    want = factorial(n) * m ** n
    out = [Check("dimensions", f"sum of squares m={m} n={n}", total == want, f"{total} vs {want}")]
    hooks = all(dim_mpartition(lam) == len(standard_tableaux(lam)) for lam in mpartitions(m, n))
    out.append(Check("dimensions", f"hook formula m={m} n={n}", hooks))
    g = young_graph_power(m, n)
    out.append(Check("dimensions", f"bratteli paths m={m} n={n}",
                     check_product_dimension(m, n) and g.level_square_sum(n) == want))
    out.append(Check("dimensions", f"square-sum recursion m={m} n={n}", square_sum_recursion(m, n) == want))
    return out


def task_irreducibility(shape_text, spec_args):
    shape = MPartition.parse(shape_text)
    spec = _spec_from(spec_args)
    d = commutant_dimension(build_representation(shape, spec))
    return [Check("irreducibility", f"commutant {shape_text}", d == 1, f"dimension {d}")]


def task_decompose(shape_texts, spec_args):
    shapes = tuple(MPartition.parse(s) for s in shape_texts)
    spec = _spec_from(spec_args)
    got = decompose(build_tensor_module(shapes, spec))
    want = expected_decomposition(shapes)
    name = "decompose " + " x ".join(shape_texts)
    detail = ", ".join(f"{k.to_text()}:{v}" for k, v in sorted(got.items(), key=lambda kv: kv[0].parts))
    out = [Check("appendixA", name, got == want, detail)]
    if shapes[0].size >= 1:
        ok = verify_restriction_compatibility(shapes, spec)
        out.append(Check("appendixA", "restriction " + " x ".join(shape_texts), ok))
    return out


def task_subspaces(case):
    data = ref.TENSOR_CASES[case]
    shapes = [MPartition.parse(s) for s in data["shapes"]]
    mod = build_tensor_module(shapes)
    left = standard_tableaux(shapes[0])
    right = ref.tableaux(data["right_basis"])
    out = []
    perm = [mod.index((x, y)) for x in left for y in right]
    for i, (pre, rows) in enumerate(data["sigma"], start=1):
        diff = mod.sigma(i).submatrix(perm).first_difference(ref.dense(rows, 1, pre))
        out.append(Check("appendixA", f"{case} printed sigma{i}", diff is None, "" if diff is None else f"entry {diff}"))
    target = ref.one_component_matrices(data["target"])
    covered = 0
    for k, sub in enumerate(data["subspaces"], start=1):
        vecs = [{mod.index((left[i - 1], right[j - 1])): ref.expr(x, 1) for (i, j), x in v.items()} for v in sub]
        covered += len(vecs)
        act = subspace_action(mod, vecs)
        if act is None:
            out.append(Check("appendixA", f"{case} subspace {k}", False, "not invariant"))
            continue
        diffs = [a.first_difference(t) for a, t in zip(act[1:], target)]
        bad = [i + 1 for i, d in enumerate(diffs) if d is not None]
        out.append(Check("appendixA", f"{case} subspace {k}", not bad, f"sigma {bad} differ" if bad else ""))
    out.append(Check("appendixA", f"{case} subspaces fill the module", covered == mod.dim, f"{covered} of {mod.dim}"))
    return out


def task_traces():
    out = []
    reps = {}
    for key in ("[[2,1,1]]", "[[2,2]]", "[[1,1,1,1]]"):
        reps[key] = build_representation(MPartition.parse(key))
    reps["[[2,2]]+[[1,1,1,1]]"] = direct_sum(reps["[[2,2]]"], reps["[[1,1,1,1]]"])
    for key, text in ref.TRACES_S1S3.items():
        got = word_trace(reps[key], "sigma1 sigma3")
        out.append(Check("appendixA", f"trace sigma1 sigma3 on {key}", got == ref.expr(text, 1), str(got)))
    pre, rows = ref.SIGMA1_SIGMA3_211
    prod = reps["[[2,1,1]]"].sigma(1) @ reps["[[2,1,1]]"].sigma(3)
    out.append(Check("appendixA", "sigma1 sigma3 on [[2,1,1]]", prod.equals(ref.dense(rows, 1, pre))))
    return out


def task_two_component(shape_text):
    data = ref.TWO_COMPONENT[shape_text]
    shape = MPartition.parse(shape_text)
    rep = build_representation(shape)
    out = []
    for i, rows in enumerate(data["sigma"], start=1):
        diff = rep.sigma(i).first_difference(ref.dense(rows, 2))
        out.append(Check("appendixC", f"{shape_text} sigma{i}", diff is None, "" if diff is None else f"entry {diff}"))
    diff = rep.tau.first_difference(ref.diag(data["tau"], 2))
    out.append(Check("appendixC", f"{shape_text} tau", diff is None, "" if diff is None else f"entry {diff}"))
    G = gram_matrix(shape)
    bad = [k for k, x in enumerate(data["gram"]) if not (G.entries[k] == ref.expr(x, 2))]
    out.append(Check("appendixC", f"{shape_text} gram", not bad, f"entries {bad}" if bad else ""))
    for (sh, gen, r, c), printed in ref.MISPRINTS.items():
        if sh != shape_text:
            continue
        entry = rep.sigma(gen)[r - 1, c - 1]
        wrong = not (entry == ref.expr(printed, 2))
        out.append(Check("appendixC", f"{shape_text} sigma{gen}[{r},{c}] printed form differs", wrong))
    return out


TASKS = {
    "relations": task_relations, "gram": task_gram, "baxter": task_baxter, "spectrum": task_spectrum,
    "content_strings": task_content_strings, "idempotents": task_idempotents, "dimensions": task_dimensions,
    "irreducibility": task_irreducibility, "decompose": task_decompose, "subspaces": task_subspaces,
    "traces": task_traces, "two_component": task_two_component,
}


def _spec_args(spec: ParamSpec | None):
    return None if spec is None else (spec.q, tuple(spec.v))


def plan(suite: str, m: int = 2, max_n: int = 4, spec: ParamSpec | None = None) -> list:
    """Expand a suite name into (task name, args) pairs.

    ``spec`` None means symbolic wherever the check supports it; the checks
    that need numbers (ranks, commutants) use ``default_spec(m)`` then.
    """
    if suite not in SUITES and suite != "all":
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
    if suite == "all":
        return [t for s in SUITES for t in plan(s, m, max_n, spec)]
    sa = _spec_args(spec)
    num = _spec_args(spec or default_spec(m))
    tasks: list = []
    if suite in ("relations", "gram", "spectrum"):
        tasks = [(suite, (s.to_text(), sa)) for s in _shapes(m, max_n)]
        if suite == "spectrum":
            tasks += [("content_strings", (m, n)) for n in range(1, max_n + 1)]
    elif suite == "baxter":
        tasks = [("baxter", (s.to_text(), sa)) for s in _shapes(m, max_n, 3)]
    elif suite == "idempotents":
        tasks = [("idempotents", (s.to_text(), num)) for s in _shapes(m, max_n)]
    elif suite == "irreducibility":
        tasks = [("irreducibility", (s.to_text(), num)) for s in _shapes(m, max_n)]
    elif suite == "dimensions":
        tasks = [("dimensions", (m, n)) for n in range(1, max_n + 1)]
    elif suite == "appendixA":
        top = min(max_n, 3)
        for n in range(1, top + 1):
            for a in mpartitions(m, n):
                for b in mpartitions(m, n):
                    tasks.append(("decompose", ((a.to_text(), b.to_text()), num)))
        one = _spec_args(default_spec(1))
        for b in mpartitions(1, 4):
            tasks.append(("decompose", (("[[2,1,1]]", b.to_text()), one)))
        tasks += [("subspaces", (case,)) for case in ref.TENSOR_CASES]
        tasks.append(("traces", ()))
    elif suite == "appendixC":
        tasks = [("two_component", (s,)) for s in ref.TWO_COMPONENT]
    return tasks


def run_task(task) -> list:
    name, args = task
    try:
        return TASKS[name](*args)
    except Exception as exc:  # a crash is a failed check, reported in place
        return [Check(name, f"{name}{args}", False, f"{type(exc).__name__}: {exc}")]


def run(tasks: list, jobs: int = 1):
    """Yield Check records in task order; ``jobs`` > 1 uses a process pool."""
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield from run_task(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for res in pool.map(run_task, tasks):
            yield from res


def summarize(checks) -> Counter:
    return Counter("pass" if c.ok else "fail" for c in checks)
