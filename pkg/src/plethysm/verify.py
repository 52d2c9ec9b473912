"""Named self-checks tying the word bases to independent recomputations.

Each check recomputes something two ways and compares exactly; there are no
tolerances anywhere.  The golden decomposition tables live in
data/golden/ and are compared byte for byte, so a formatting drift fails as
loudly as a wrong multiplicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

from . import actions, hwv, oracle, tableaux
from .polynomials import Monomial

GOLDEN_CASES = tuple(
    (m, variant) for m in range(1, 7) for variant in ("sym", "alt")
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def golden_resource(m: int, variant: str):
    return resources.files("plethysm").joinpath(f"data/golden/k3_m{m}_{variant}.json")


def load_golden_text(m: int, variant: str) -> str:
    return golden_resource(m, variant).read_text(encoding="utf-8")


# ---------------------------------------------------------------------------
# individual checks


def check_generators_un_invariant(n: int = 4) -> CheckResult:
    gens = hwv.generators_k3()
    bad = [
        name
        for name in ("alpha1", "alpha2", "alpha3", "gamma1", "gamma2")
        if not actions.is_un_invariant(gens[name], n)
    ]
    for name, poly in hwv.generators_k2().items():
        if not actions.is_un_invariant(poly, 2):
            bad.append(f"k2:{name}")
    return CheckResult(
        "generators-un-invariant",
        not bad,
        f"raising operators kill all generators (n={n})" if not bad
        else f"not killed: {', '.join(bad)}",
    )


def check_generators_symmetry_type() -> CheckResult:
    gens = hwv.generators_k3()
    problems = []
    for name in ("alpha1", "alpha2", "alpha3"):
        if not actions.is_sk_invariant(gens[name], 3):
            problems.append(f"{name} not invariant")
    for name in ("gamma1", "gamma2"):
        if not actions.is_sign_equivariant(gens[name], 3):
            problems.append(f"{name} not sign-equivariant")
    if not actions.is_sk_invariant(gens["gamma1"] * gens["gamma2"], 3):
        problems.append("gamma1*gamma2 not invariant")
    return CheckResult(
        "generators-symmetry-type",
        not problems,
        "alphas invariant, gammas sign-equivariant" if not problems
        else "; ".join(problems),
    )


def check_generator_grades_weights() -> CheckResult:
    gens = hwv.generators_k3()
    expected = {
        "alpha1": (1, (3,)),
        "gamma1": (1, (1, 1, 1)),
        "alpha2": (2, (4, 2)),
        "gamma2": (2, (3, 3)),
        "alpha3": (3, (6, 3)),
    }
    problems = []
    for name, (grade, weight) in expected.items():
        poly = gens[name]
        if poly.column_degree(3) != (grade,) * 3:
            problems.append(f"{name} grade")
        if tableaux.normalize_partition(poly.row_weight(3)) != weight:
            problems.append(f"{name} weight")
    return CheckResult(
        "generator-grades-weights",
        not problems,
        "column degrees and torus weights match" if not problems
        else "; ".join(problems),
    )


def check_leading_monomial_table() -> CheckResult:
    gens = hwv.generators_k3()
    expected = {
        "alpha1": ({(1, 1): 1, (1, 2): 1, (1, 3): 1}, 1),
        "alpha2": ({(1, 1): 2, (1, 2): 2, (2, 3): 2}, 1),
        "alpha3": ({(1, 1): 3, (1, 2): 3, (2, 3): 3}, 2),
        "gamma1": ({(1, 1): 1, (2, 2): 1, (3, 3): 1}, 1),
        "gamma2": ({(1, 1): 2, (1, 2): 1, (2, 2): 1, (2, 3): 2}, 1),
    }
    problems = []
    for name, (exps, coeff) in expected.items():
        mono, c = gens[name].leading_monomial()
        if mono != Monomial(exps) or c != coeff:
            problems.append(f"{name}: got {c}*{mono}")
    return CheckResult(
        "leading-monomial-table",
        not problems,
        "five generator leading monomials as tabulated" if not problems
        else "; ".join(problems),
    )


def check_word_leading_monomials(max_grade: int) -> CheckResult:
    seen: dict[Monomial, str] = {}
    count = 0
    problems = []
    for m in range(0, max_grade + 1):
        variants = ["sym"] + (["alt"] if m >= 1 else [])
        for variant in variants:
            for word in hwv.enumerate_basis(m, variant):
                count += 1
                poly = word.expand()
                if poly.is_zero:
                    problems.append(f"{word} expands to zero")
                    continue
                mono, coeff = poly.leading_monomial()
                p, q = word.gamma1_exponent, word.gamma2_exponent
                a, b, c = word.a, word.b, word.c
                wanted = Monomial({
                    (1, 1): a + 2 * b + 3 * c + p + 2 * q,
                    (1, 2): a + 2 * b + 3 * c + q,
                    (1, 3): a,
                    (2, 2): p + q,
                    (2, 3): 2 * b + 3 * c + 2 * q,
                    (3, 3): p,
                })
                if mono != wanted:
                    problems.append(f"{word}: leading monomial {mono}")
                if coeff != 2 ** c:
                    problems.append(f"{word}: leading coefficient {coeff}")
                prior = seen.get(mono)
                if prior is not None:
                    problems.append(f"collision {prior} vs {word} ({variant})")
                seen[mono] = f"{word} ({variant})"
    return CheckResult(
        "word-leading-monomials",
        not problems,
        f"{count} words through grade {max_grade}: exponent relations hold, "
        "all leading monomials distinct" if not problems
        else "; ".join(problems[:4]),
    )


def check_discriminant(force_gamma1_variant: bool = False) -> list[CheckResult]:
    outcome = hwv.verify_discriminant_relation()
    results = [
        CheckResult(
            "discriminant-identity",
            outcome.corrected_holds,
            "4*alpha2^3 - alpha3^2 == 27*alpha1^2*gamma2^2",
        )
    ]
    if force_gamma1_variant:
        results.append(
            CheckResult(
                "alpha23-printed-variant",
                outcome.gamma1_variant_holds,
                "gamma1 variant asserted to hold",
            )
        )
    else:
        results.append(
            CheckResult(
                "discriminant-gamma1-variant-fails",
                not outcome.gamma1_variant_holds,
                "the gamma1 form of the identity fails, as the gradings force",
            )
        )
    return results


def check_phi_images() -> CheckResult:
    gens = hwv.generators_k3()
    phi = hwv.phi_images_k3()
    problems = []
    if phi["sigma2"] != -3 * gens["alpha2"]:
        problems.append("sigma2 != -3*alpha2")
    if phi["sigma3"] != -gens["alpha3"]:
        problems.append("sigma3 != -alpha3")
    target = 27 * gens["alpha1"] * gens["gamma2"]
    if phi["delta"] == target:
        delta_note = "delta == 27*alpha1*gamma2"
    elif phi["delta"] == -target:
        delta_note = "delta == -27*alpha1*gamma2"
    else:
        problems.append("delta is not +-27*alpha1*gamma2")
        delta_note = ""
    if phi["delta"] ** 2 != 27 * (4 * gens["alpha2"] ** 3 - gens["alpha3"] ** 2):
        problems.append("delta^2 != 27*(4*alpha2^3 - alpha3^2)")
    return CheckResult(
        "elementary-symmetric-images",
        not problems,
        f"sigma2, sigma3, delta match ({delta_note})" if not problems
        else "; ".join(problems),
    )


def check_golden_tables() -> CheckResult:
    problems = []
    for m, variant in GOLDEN_CASES:
        produced = hwv.decompose(3, m, variant).to_json_text()
        stored = load_golden_text(m, variant)
        if produced != stored:
            problems.append(f"m={m} {variant}")
    return CheckResult(
        "golden-decomposition-tables",
        not problems,
        f"all {len(GOLDEN_CASES)} stored tables reproduced byte for byte"
        if not problems else "mismatch at " + ", ".join(problems),
    )


def check_against_kostka_oracle(m_max: int, n: int) -> CheckResult:
    problems = []
    cases = 0
    for m in range(0, m_max + 1):
        for variant in ("sym", "alt"):
            if variant == "alt" and m < 1:
                continue
            cases += 1
            basis = hwv.decompose(3, m, variant).multiplicities()
            table = oracle.multiplicities_by_kostka(m, n, variant)
            if basis != table:
                problems.append(f"m={m} {variant}: words {basis} vs oracle {table}")
    return CheckResult(
        "basis-vs-kostka-oracle",
        not problems,
        f"word counts equal character multiplicities for {cases} components "
        f"(m <= {m_max}, n = {n})" if not problems else "; ".join(problems[:2]),
    )


def check_against_kernel_oracle(m_max: int, n: int,
                                max_dim: int | None = None) -> CheckResult:
    problems = []
    cases = 0
    for m in range(0, m_max + 1):
        for variant in ("sym", "alt"):
            if variant == "alt" and m < 1:
                continue
            counts = hwv.decompose(3, m, variant).multiplicities()
            for shape in _partitions(3 * m, 3):
                cases += 1
                kernel = oracle.hwv_kernel_multiplicity(m, n, shape, variant,
                                                        max_dim=max_dim)
                if kernel != counts.get(shape, 0):
                    problems.append(
                        f"m={m} {variant} {shape}: kernel {kernel}, "
                        f"words {counts.get(shape, 0)}"
                    )
    return CheckResult(
        "basis-vs-kernel-oracle",
        not problems,
        f"raising-operator kernels match word counts in {cases} weight spaces "
        f"(m <= {m_max}, n = {n})" if not problems else "; ".join(problems[:2]),
    )


def check_closed_form(m_max: int) -> CheckResult:
    problems = []
    cases = 0
    for m in range(0, m_max + 1):
        for variant in ("sym", "alt"):
            if variant == "alt" and m < 1:
                continue
            counts = hwv.decompose(3, m, variant).multiplicities()
            for shape in _partitions(3 * m, 3):
                cases += 1
                formula = hwv.multiplicity_closed_form(shape, variant)
                if formula != counts.get(shape, 0):
                    problems.append(f"m={m} {variant} {shape}")
    return CheckResult(
        "multiplicity-closed-form",
        not problems,
        f"floor formula equals word count in {cases} cases (m <= {m_max})"
        if not problems else "wrong at " + ", ".join(problems[:4]),
    )


def check_kostka_closed_form(m_max: int) -> CheckResult:
    problems = []
    cases = 0
    for m in range(1, m_max + 1):
        for shape in _partitions(3 * m, 3):
            cases += 1
            l1, l2, l3 = tableaux.pad(shape, 3)
            expected = min(l1 - l2, l2 - l3) + 1
            if tableaux.kostka(shape, (m, m, m)) != expected:
                problems.append(str(shape))
    return CheckResult(
        "kostka-square-content",
        not problems,
        f"K(D, (m,m,m)) = min(l1-l2, l2-l3) + 1 in {cases} cases (m <= {m_max})"
        if not problems else "wrong at " + ", ".join(problems[:4]),
    )


def check_standard_monomials(m_max: int, n: int = 4) -> CheckResult:
    problems = []
    cases = 0
    for m in range(0, m_max + 1):
        seen: set[Monomial] = set()
        for shape in _partitions(3 * m, 3):
            for T in tableaux.enumerate_sst(shape, (m, m, m)):
                cases += 1
                poly = tableaux.delta_tableau(T, n)
                mono, coeff = poly.leading_monomial()
                if (mono, coeff) != (tableaux.content_monomial(T), 1):
                    problems.append(f"LM wrong for {T}")
                if not actions.is_un_invariant(poly, n):
                    problems.append(f"delta_T not a highest weight vector: {T}")
                if tableaux.normalize_partition(poly.row_weight(n)) != shape:
                    problems.append(f"weight wrong for {T}")
                if mono in seen:
                    problems.append(f"leading monomial collision at {T}")
                seen.add(mono)
    return CheckResult(
        "standard-monomial-vectors",
        not problems,
        f"{cases} tableau vectors: highest weight, LM = m_T, all distinct "
        f"(m <= {m_max})" if not problems else "; ".join(problems[:4]),
    )


def check_k2(m_max: int = 10) -> CheckResult:
    problems = []
    for m in range(0, m_max + 1):
        for variant in ("sym", "alt"):
            if variant == "alt" and m < 1:
                continue
            report = hwv.decompose(2, m, variant)
            want = {
                tableaux.normalize_partition((2 * m - j, j))
                for j in range(0 if variant == "sym" else 1, m + 1, 2)
            }
            if set(report.multiplicities()) != want:
                problems.append(f"m={m} {variant}: diagrams")
            if any(mult != 1 for mult in report.multiplicities().values()):
                problems.append(f"m={m} {variant}: multiplicity")
            for entry in report.entries:
                for word in entry.words:
                    poly = word.expand()
                    if not actions.is_un_invariant(poly, 2):
                        problems.append(f"{word} not highest weight")
                    swapped = actions.permute_columns(
                        poly, actions.transposition(2, 1, 2))
                    expected = poly if word.j % 2 == 0 else -poly
                    if swapped != expected:
                        problems.append(f"{word} has wrong swap sign")
    return CheckResult(
        "pair-case-complete",
        not problems,
        f"k=2 words through m={m_max}: one constituent per even (sym) or odd "
        "(alt) gamma power, each a highest weight vector with the right sign"
        if not problems else "; ".join(problems[:4]),
    )


def check_schur_weyl_degree_one() -> CheckResult:
    problems = []
    counts = {
        shape: tableaux.kostka(shape, (1, 1, 1))
        for shape in ((3,), (2, 1), (1, 1, 1))
    }
    if counts != {(3,): 1, (2, 1): 2, (1, 1, 1): 1}:
        problems.append(f"standard tableau counts {counts}")
    for n in (3, 4, 5):
        total = sum(
            counts[shape] * oracle.weyl_dimension(shape, n) for shape in counts
        )
        if total != n ** 3:
            problems.append(f"n={n}: {total} != {n ** 3}")
    return CheckResult(
        "cube-decomposition-counts",
        not problems,
        "(C^n)^(x3) splits as 1,2,1 copies with total dimension n^3 for "
        "n = 3, 4, 5" if not problems else "; ".join(problems),
    )


def check_specht_images() -> CheckResult:
    problems = []
    cases = 0
    for shape in ((3,), (2, 1), (1, 1, 1)):
        for T in tableaux.enumerate_sst(shape, (1, 1, 1)):
            cases += 1
            image = tableaux.specht_map(tableaux.delta_tableau(T), 3)
            direct = tableaux.specht_polynomial(T)
            if image != direct:
                problems.append(f"{T}")
    return CheckResult(
        "specht-images",
        not problems,
        f"tableau vectors map onto the {cases} Specht products at degree one"
        if not problems else "wrong at " + ", ".join(problems),
    )


def check_dimension_conservation(m_max: int) -> CheckResult:
    problems = []
    cases = 0
    for n in (3, 4):
        for m in range(0, m_max + 1):
            d = math.comb(m + n - 1, n - 1)
            for variant, total in (("sym", math.comb(d + 2, 3)),
                                   ("alt", math.comb(d, 3))):
                if variant == "alt" and m < 1:
                    continue
                cases += 1
                report = hwv.decompose(3, m, variant)
                found = sum(
                    entry.multiplicity * oracle.weyl_dimension(entry.diagram, n)
                    for entry in report.entries
                    if len(entry.diagram) <= n
                )
                if found != total:
                    problems.append(f"m={m} n={n} {variant}: {found} != {total}")
    return CheckResult(
        "dimension-conservation",
        not problems,
        f"constituent dimensions sum to dim S^3/Λ^3 in {cases} components "
        f"(m <= {m_max}, n = 3, 4)" if not problems else "; ".join(problems[:3]),
    )


def _partitions(total: int, max_parts: int) -> list[tuple[int, ...]]:
    """All partitions of `total` into at most `max_parts` parts."""
    out: list[tuple[int, ...]] = []

    def go(rest: int, bound: int, acc: tuple[int, ...]) -> None:
        if rest == 0:
            out.append(acc)
            return
        if len(acc) == max_parts:
            return
        for part in range(min(rest, bound), 0, -1):
            go(rest - part, part, acc + (part,))

    go(total, total if total else 0, ())
    return out


# ---------------------------------------------------------------------------
# the suite


def run_verification(m_max: int = 3, n: int = 3,
                     max_dim: int | None = None,
                     force_gamma1_variant: bool = False) -> list[CheckResult]:
    """Run every check; heavier checks scale with m_max and n."""
    lm_grade = min(max(m_max, 4), 8)
    results: list[CheckResult] = [
        check_generators_un_invariant(),
        check_generators_symmetry_type(),
        check_generator_grades_weights(),
        check_leading_monomial_table(),
        check_word_leading_monomials(lm_grade),
    ]
    results.extend(check_discriminant(force_gamma1_variant))
    results.append(check_phi_images())
    results.append(check_golden_tables())
    results.append(check_against_kostka_oracle(min(m_max, 5), n))
    results.append(check_against_kernel_oracle(min(m_max, 3), n, max_dim=max_dim))
    results.append(check_closed_form(m_max))
    results.append(check_kostka_closed_form(max(m_max, 6)))
    results.append(check_standard_monomials(min(m_max, 3)))
    results.append(check_k2())
    results.append(check_schur_weyl_degree_one())
    results.append(check_specht_images())
    results.append(check_dimension_conservation(min(m_max, 5)))
    return results
