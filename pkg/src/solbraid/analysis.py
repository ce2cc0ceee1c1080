"""
Analysis harness for finitely generated subgroups of braid groups.

Given generator words, the harness computes the induced permutation group
of puncture endpoints exactly, classifies the entropy of the generators,
and exercises the dichotomy the package exists for: a subgroup whose
permutation image is not solvable must contain a positive-entropy element,
so in that case the harness searches words in the generators for one and
certifies it with a Dynnikov estimate plus a Burau spectral lower bound.
For subgroups declared to be of known shape (commuting twists, cyclic) it
additionally checks the derived-length sandwich

    dlen(G) - 1 <= dlen(image) <= dlen(G)

and, when the sampled group is zero-entropy and the image solvable, that
sampled kernel words pairwise commute, reporting the rank of their linking
matrices as a freeness witness.  A VIOLATION verdict is reserved for
genuine counterexamples and is never expected to be emitted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .braids import BraidWord, Permutation, linking_matrix, permutation_of
from .dynnikov import (
    Classification,
    ClassifiedWord,
    EntropyConfig,
    classify,
    equal,
    is_trivial,
)
from .permgroups import (
    DEFAULT_BOUND,
    UNSOLVABLE,
    PermGroup,
    derived_length,
    generate_closure,
    orbits,
)

__all__ = [
    "SubgroupSpec",
    "AnalysisConfig",
    "EntropyCertificate",
    "KernelReport",
    "SandwichReport",
    "PermSummary",
    "GroupAnalysisReport",
    "StructureContradiction",
    "EXHAUSTED",
    "STRUCTURES",
    "analyze",
    "find_positive_entropy",
    "kernel_words",
    "check_dlen_sandwich",
    "verify_kernel_abelian",
]

STRUCTURES = ("DISJOINT_TWISTS", "CYCLIC")

CERT_TOLERANCE = 5e-3


class StructureContradiction(ValueError):
    """A declared structure tag is contradicted by computation."""


class _ExhaustedType:
    __slots__ = ()

    def __repr__(self):
        return "EXHAUSTED"


#: Returned by :func:`find_positive_entropy` when the word budget runs out.
EXHAUSTED = _ExhaustedType()


@dataclass(frozen=True)
class SubgroupSpec:
    """A finitely generated subgroup of the braid group on n strands."""

    n: int
    generators: tuple[tuple[str, BraidWord], ...]
    structure: str | None = None

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        for name, word in self.generators:
            if word.n != self.n:
                raise ValueError(f"generator {name!r} has {word.n} strands, spec has {self.n}")
        if self.structure is not None and self.structure not in STRUCTURES:
            raise ValueError(f"unknown structure tag {self.structure!r}; know {STRUCTURES}")

    @classmethod
    def from_words(cls, n: int, words, structure: str | None = None) -> SubgroupSpec:
        gens = tuple(
            (f"g{i + 1}", w if isinstance(w, BraidWord) else BraidWord.parse(w, n))
            for i, w in enumerate(words)
        )
        return cls(n, gens, structure)

    @classmethod
    def from_mapping(cls, data: dict) -> SubgroupSpec:
        """Build from the JSON spec-file shape {n, generators: [{name, word}], structure?}."""
        try:
            n = int(data["n"])
            raw = data["generators"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"bad subgroup spec: {exc}") from None
        gens = tuple(
            (str(g["name"]), BraidWord.parse(str(g["word"]), n)) for g in raw
        )
        return cls(n, gens, data.get("structure"))

    def to_mapping(self) -> dict:
        out = {
            "n": self.n,
            "generators": [{"name": name, "word": str(w)} for name, w in self.generators],
        }
        if self.structure is not None:
            out["structure"] = self.structure
        return out


@dataclass(frozen=True)
class AnalysisConfig:
    entropy: EntropyConfig = field(default_factory=EntropyConfig)
    burau_grid: int = 64
    search_max_len: int = 8        # generator-word length budget for the entropy search
    kernel_max_len: int = 4        # generator-word length budget for kernel sampling
    max_kernel_words: int = 64
    closure_bound: int = DEFAULT_BOUND


@dataclass(frozen=True)
class EntropyCertificate:
    """A machine-checkable witness that a word has positive entropy."""

    word: BraidWord
    dynnikov_estimate: float
    burau_lower_bound: float
    rigorous: bool

    def __post_init__(self):
        if self.rigorous and not self.burau_lower_bound > 0:
            raise ValueError("rigorous certificate needs a positive Burau bound")
        if self.dynnikov_estimate < self.burau_lower_bound - CERT_TOLERANCE:
            raise ValueError(
                "incoherent certificate: estimate "
                f"{self.dynnikov_estimate} below Burau bound {self.burau_lower_bound}"
            )


@dataclass(frozen=True)
class PermSummary:
    order: int
    orbit_partition: tuple[tuple[int, ...], ...]
    solvable: bool
    derived_length: object  # int or UNSOLVABLE


@dataclass(frozen=True)
class KernelReport:
    status: str  # PASS | FAIL | NOT_APPLICABLE
    words: tuple[BraidWord, ...]
    commutes: bool | None
    witness: tuple[BraidWord, BraidWord] | None
    linking_rank: int
    reason: str | None = None


@dataclass(frozen=True)
class SandwichReport:
    status: str  # PASS | FAIL | SKIPPED
    dlen_group: int | None = None
    dlen_image: object = None


@dataclass(frozen=True)
class GroupAnalysisReport:
    spec: SubgroupSpec
    perm: PermSummary
    generator_findings: tuple[tuple[str, ClassifiedWord], ...]
    kernel_findings: tuple[tuple[BraidWord, ClassifiedWord], ...]
    kernel_check: KernelReport
    sandwich: SandwichReport
    search_status: str  # FOUND | EXHAUSTED | SKIPPED
    certificate: EntropyCertificate | None
    anomalies: tuple[str, ...]
    verdict: str  # CONSISTENT | VIOLATION

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == "CONSISTENT" and not self.anomalies else 2


def _alphabet(spec: SubgroupSpec) -> list[BraidWord]:
    gens = [w for _, w in spec.generators]
    return gens + [w.inverse() for w in gens]


def _words_up_to(spec: SubgroupSpec, max_len: int):
    """All nonempty words over the generators and inverses, shortest first,
    inverses following positives, lexicographic within a length."""
    alphabet = _alphabet(spec)
    for length in range(1, max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            word = BraidWord.identity(spec.n)
            for piece in combo:
                word = word * piece
            yield word


def _certificate_from(cw: ClassifiedWord) -> EntropyCertificate:
    return EntropyCertificate(
        word=cw.word,
        dynnikov_estimate=cw.estimate.value,
        burau_lower_bound=cw.burau_bound,
        rigorous=cw.rigorous,
    )


def find_positive_entropy(
    spec: SubgroupSpec,
    max_len: int | None = None,
    threshold: float | None = None,
    config: AnalysisConfig | None = None,
):
    """Breadth-first search for a positive-entropy word in the subgroup.

    Returns the certificate of the first rigorously positive word in the
    deterministic search order, falling back to the first heuristically
    positive one, or EXHAUSTED when the budget yields neither.
    """
    cfg = config or AnalysisConfig()
    budget = cfg.search_max_len if max_len is None else max_len
    if budget < 1:
        raise ValueError(f"max_len must be >= 1, got {budget}")
    entropy_cfg = cfg.entropy
    if threshold is not None:
        entropy_cfg = replace(entropy_cfg, positive_threshold=threshold)
    fallback = None
    for word in _words_up_to(spec, budget):
        cw = classify(word, config=entropy_cfg, grid=cfg.burau_grid)
        if cw.label is Classification.POSITIVE_ENTROPY:
            cert = _certificate_from(cw)
            if cert.rigorous:
                return cert
            if fallback is None:
                fallback = cert
    return fallback if fallback is not None else EXHAUSTED


def kernel_words(
    spec: SubgroupSpec,
    max_len: int | None = None,
    config: AnalysisConfig | None = None,
) -> list[BraidWord]:
    """Nontrivial elements of the subgroup inducing the identity permutation,
    as shortest representative words over the generators, deduplicated by
    exact braid equality."""
    cfg = config or AnalysisConfig()
    budget = cfg.kernel_max_len if max_len is None else max_len
    reps: list[BraidWord] = []
    for word in _words_up_to(spec, budget):
        if not permutation_of(word).is_identity():
            continue
        if is_trivial(word):
            continue
        if any(equal(word, rep) for rep in reps):
            continue
        reps.append(word)
        if len(reps) >= cfg.max_kernel_words:
            break
    return reps


def _linking_rank(words) -> int:
    """Rank of the span of the words' linking matrices, exact over Q."""
    rows = []
    for w in words:
        M = linking_matrix(w)
        rows.append([Fraction(M[i][j]) for i in range(w.n) for j in range(i + 1, w.n)])
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_col = 0
    while rank < len(rows) and pivot_col < cols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][pivot_col] != 0), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][pivot_col]
        for r in range(rank + 1, len(rows)):
            if rows[r][pivot_col] != 0:
                factor = rows[r][pivot_col] / lead
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        pivot_col += 1
    return rank


def _kernel_check(
    solvable: bool,
    generator_findings,
    kernel_findings,
) -> KernelReport:
    words = tuple(w for w, _ in kernel_findings)
    rank = _linking_rank(words)
    commutes, witness = True, None
    for (u, _), (v, _) in itertools.combinations(kernel_findings, 2):
        if not equal(u * v, v * u):
            commutes, witness = False, (u, v)
            break
    if not solvable:
        return KernelReport("NOT_APPLICABLE", words, commutes, witness, rank,
                            reason="permutation image is not solvable")
    positive = [
        (str(w), cw) for w, cw in kernel_findings
        if cw.label is Classification.POSITIVE_ENTROPY
    ] + [
        (name, cw) for name, cw in generator_findings
        if cw.label is Classification.POSITIVE_ENTROPY
    ]
    if positive:
        return KernelReport("NOT_APPLICABLE", words, commutes, witness, rank,
                            reason=f"positive entropy found for {positive[0][0]}")
    not_zero = [name for name, cw in generator_findings
                if cw.label is not Classification.ZERO_ENTROPY]
    if not_zero:
        return KernelReport("NOT_APPLICABLE", words, commutes, witness, rank,
                            reason=f"could not establish zero entropy for {not_zero[0]}")
    if commutes:
        return KernelReport("PASS", words, True, None, rank)
    return KernelReport("FAIL", words, False, witness, rank,
                        reason=f"kernel words {witness[0]} and {witness[1]} do not commute")


def verify_kernel_abelian(
    spec: SubgroupSpec,
    max_len: int | None = None,
    config: AnalysisConfig | None = None,
) -> KernelReport:
    """Check that sampled kernel words pairwise commute, provided the
    zero-entropy/solvable hypotheses hold as far as sampled."""
    cfg = config or AnalysisConfig()
    perms = [permutation_of(w) for _, w in spec.generators]
    image = generate_closure(perms, bound=cfg.closure_bound)
    solvable = derived_length(image) is not UNSOLVABLE
    gen_findings = tuple(
        (name, classify(w, config=cfg.entropy, grid=cfg.burau_grid))
        for name, w in spec.generators
    )
    kwords = kernel_words(spec, max_len, config=cfg)
    kernel_findings = tuple(
        (w, classify(w, config=cfg.entropy, grid=cfg.burau_grid)) for w in kwords
    )
    return _kernel_check(solvable, gen_findings, kernel_findings)


def check_dlen_sandwich(
    spec: SubgroupSpec,
    image: PermGroup | None = None,
    config: AnalysisConfig | None = None,
) -> SandwichReport:
    """Verify dlen(G) - 1 <= dlen(image) <= dlen(G) for declared structures.

    DISJOINT_TWISTS declares pairwise-commuting generators (so the group is
    abelian) and CYCLIC a single generator; both make dlen(G) exactly
    computable.  Raises StructureContradiction when the declaration fails.
    """
    cfg = config or AnalysisConfig()
    if spec.structure is None:
        return SandwichReport("SKIPPED")
    if spec.structure == "DISJOINT_TWISTS":
        for (n1, w1), (n2, w2) in itertools.combinations(spec.generators, 2):
            if not equal(w1 * w2, w2 * w1):
                raise StructureContradiction(
                    f"declared DISJOINT_TWISTS but generators {n1} and {n2} do not commute"
                )
        dlen_group = 1 if any(not is_trivial(w) for _, w in spec.generators) else 0
    else:  # CYCLIC
        if len(spec.generators) != 1:
            raise StructureContradiction(
                f"declared CYCLIC but spec has {len(spec.generators)} generators"
            )
        dlen_group = 0 if is_trivial(spec.generators[0][1]) else 1
    if image is None:
        perms = [permutation_of(w) for _, w in spec.generators]
        image = generate_closure(perms, bound=cfg.closure_bound)
    dlen_image = derived_length(image)
    if dlen_image is UNSOLVABLE:
        return SandwichReport("FAIL", dlen_group, dlen_image)
    ok = dlen_group - 1 <= dlen_image <= dlen_group
    return SandwichReport("PASS" if ok else "FAIL", dlen_group, dlen_image)


def analyze(spec: SubgroupSpec, config: AnalysisConfig | None = None) -> GroupAnalysisReport:
    """Full pipeline: permutation image, entropy classification, positive
    entropy search when the image demands it, kernel and sandwich checks."""
    cfg = config or AnalysisConfig()
    if spec.n < 3:
        raise ValueError("analysis needs at least 3 strands")
    perms = [permutation_of(w) for _, w in spec.generators]
    image = generate_closure(perms, bound=cfg.closure_bound)
    dlen_image = derived_length(image)
    solvable = dlen_image is not UNSOLVABLE
    perm_summary = PermSummary(
        order=image.order,
        orbit_partition=tuple(orbits(image)),
        solvable=solvable,
        derived_length=dlen_image,
    )

    generator_findings = tuple(
        (name, classify(w, config=cfg.entropy, grid=cfg.burau_grid))
        for name, w in spec.generators
    )

    anomalies: list[str] = []
    search_status = "SKIPPED"
    certificate = None
    if not solvable:
        result = find_positive_entropy(spec, config=cfg)
        if result is EXHAUSTED:
            search_status = "EXHAUSTED"
            anomalies.append(
                "permutation image is unsolvable but no positive-entropy word was "
                f"found at generator-length <= {cfg.search_max_len}"
            )
        else:
            search_status = "FOUND"
            certificate = result

    kwords = kernel_words(spec, config=cfg)
    kernel_findings = tuple(
        (w, classify(w, config=cfg.entropy, grid=cfg.burau_grid)) for w in kwords
    )
    kernel_check = _kernel_check(solvable, generator_findings, kernel_findings)

    if certificate is None:
        for _, cw in generator_findings + kernel_findings:
            if cw.label is Classification.POSITIVE_ENTROPY:
                certificate = _certificate_from(cw)
                break

    sandwich = check_dlen_sandwich(spec, image=image, config=cfg)

    violation = kernel_check.status == "FAIL" or sandwich.status == "FAIL"
    return GroupAnalysisReport(
        spec=spec,
        perm=perm_summary,
        generator_findings=generator_findings,
        kernel_findings=kernel_findings,
        kernel_check=kernel_check,
        sandwich=sandwich,
        search_status=search_status,
        certificate=certificate,
        anomalies=tuple(anomalies),
        verdict="VIOLATION" if violation else "CONSISTENT",
    )
