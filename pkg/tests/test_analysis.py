import json
import random

import pytest

from solbraid.analysis import (
    EXHAUSTED,
    AnalysisConfig,
    StructureContradiction,
    SubgroupSpec,
    analyze,
    check_dlen_sandwich,
    find_positive_entropy,
    kernel_words,
    verify_kernel_abelian,
)
from solbraid.braids import BraidWord
from solbraid.dynnikov import Classification, EntropyConfig
from solbraid.permgroups import UNSOLVABLE
from solbraid.reporting import emit_report, report_to_mapping


def spec_of(n, words, structure=None):
    return SubgroupSpec.from_words(n, words, structure=structure)


FAST = AnalysisConfig(entropy=EntropyConfig(iterations=100, seeds=2))


def test_spec_validation():
    with pytest.raises(ValueError):
        SubgroupSpec(3, ())
    with pytest.raises(ValueError):
        spec_of(3, ["1"], structure="WHATEVER")
    with pytest.raises(ValueError):
        SubgroupSpec(4, (("g1", BraidWord.parse("1", 3)),))


def test_spec_mapping_round_trip():
    spec = spec_of(4, ["1", "3"], structure="DISJOINT_TWISTS")
    again = SubgroupSpec.from_mapping(spec.to_mapping())
    assert again == spec


def test_analyze_disjoint_twists():
    report = analyze(spec_of(4, ["1", "3"], structure="DISJOINT_TWISTS"))
    assert report.perm.order == 4
    assert report.perm.solvable
    assert report.perm.derived_length == 1
    assert all(cw.label is Classification.ZERO_ENTROPY
               for _, cw in report.generator_findings)
    assert report.kernel_check.status == "PASS"
    assert report.kernel_check.commutes
    assert report.sandwich.status == "PASS"
    assert report.verdict == "CONSISTENT"
    assert report.exit_code == 0


def test_analyze_unsolvable_image_finds_certificate():
    report = analyze(spec_of(5, ["1 2 3 4", "1"]))
    assert report.perm.order == 120
    assert not report.perm.solvable
    assert report.perm.derived_length is UNSOLVABLE
    assert report.search_status == "FOUND"
    cert = report.certificate
    assert cert is not None and cert.rigorous
    assert 0.4 <= cert.dynnikov_estimate <= 0.7
    assert report.verdict == "CONSISTENT"
    assert not report.anomalies


def test_analyze_negative_control_is_consistent():
    # trivial permutation image (solvable) and yet the group contains a
    # positive-entropy element; the implication is one-directional, so the
    # verdict stays CONSISTENT and the kernel check is not applicable
    report = analyze(spec_of(3, ["1 1", "2 2"]))
    assert report.perm.order == 1
    assert report.perm.solvable
    assert report.search_status == "SKIPPED"
    assert report.certificate is not None
    assert report.certificate.word.letters == (1, 1, -2, -2)
    assert report.certificate.rigorous
    assert abs(report.certificate.dynnikov_estimate - 1.762747) < 1e-3
    assert report.kernel_check.status == "NOT_APPLICABLE"
    assert report.verdict == "CONSISTENT"


def test_find_positive_entropy_budget_two_is_exhausted_for_cycle_and_twist():
    # every product of at most two of the generators delta = s1 s2 s3 s4 and
    # s1 (and inverses) is periodic or reducible: delta is periodic of order
    # 5, delta*s1 is periodic of order 4 ((delta s1)^4 is the full twist),
    # delta*s1^-1 is conjugate to s2 s3 s4, and the rest are twists; so an
    # honest search cannot certify positive entropy at generator-length 2
    spec = spec_of(5, ["1 2 3 4", "1"])
    assert find_positive_entropy(spec, max_len=2) is EXHAUSTED


def test_find_positive_entropy_succeeds_at_length_three():
    spec = spec_of(5, ["1 2 3 4", "1"])
    cert = find_positive_entropy(spec, max_len=3)
    assert cert is not EXHAUSTED
    assert cert.word.letters == (1, 2, 3, 4, 1, 1)
    assert cert.rigorous
    assert 0.4 <= cert.dynnikov_estimate <= 0.7
    assert abs(cert.dynnikov_estimate - 0.543535) < 1e-3
    assert abs(cert.burau_lower_bound - 0.543535) < 1e-3


def test_find_positive_entropy_exhausts_on_cyclic_twist_group():
    assert find_positive_entropy(spec_of(3, ["1"]), max_len=6) is EXHAUSTED


def test_find_positive_entropy_immediate_hit():
    cert = find_positive_entropy(spec_of(3, ["1 -2"]), max_len=1)
    assert cert is not EXHAUSTED
    assert cert.rigorous
    assert abs(cert.dynnikov_estimate - 0.9624) < 1e-3


def test_kernel_words_of_single_generator():
    words = kernel_words(spec_of(3, ["1"]), max_len=4)
    assert {w.letters for w in words} == {
        (1, 1), (-1, -1), (1, 1, 1, 1), (-1, -1, -1, -1),
    }


def test_kernel_words_of_disjoint_twists():
    # sigma_1 sigma_3 itself is not pure (permutation (1 2)(3 4)), so the
    # length-2 kernel sample is exactly the four squared twists
    words = {w.letters for w in kernel_words(spec_of(4, ["1", "3"]), max_len=2)}
    assert words == {(1, 1), (-1, -1), (3, 3), (-3, -3)}
    longer = {w.letters for w in kernel_words(spec_of(4, ["1", "3"]), max_len=4)}
    assert (1, 3, 1, 3) in longer or (1, 1, 3, 3) in longer
    # every kernel word has even counts of each letter
    for letters in longer:
        assert sum(1 for l in letters if abs(l) == 1) % 2 == 0
        assert sum(1 for l in letters if abs(l) == 3) % 2 == 0


def test_kernel_words_zero_budget_is_empty():
    assert kernel_words(spec_of(3, ["1"]), max_len=0) == []


def test_kernel_words_are_deduplicated():
    words = kernel_words(spec_of(3, ["1"]), max_len=4)
    from solbraid.dynnikov import equal
    for i, u in enumerate(words):
        for v in words[i + 1:]:
            assert not equal(u, v)


def test_sandwich_disjoint_twists():
    result = check_dlen_sandwich(spec_of(4, ["1", "3"], structure="DISJOINT_TWISTS"))
    assert result.status == "PASS"
    assert result.dlen_group == 1
    assert result.dlen_image == 1


def test_sandwich_cyclic_single_twist():
    result = check_dlen_sandwich(spec_of(3, ["1"], structure="CYCLIC"))
    assert result.status == "PASS"
    assert result.dlen_group == 1
    assert result.dlen_image == 1


def test_sandwich_cyclic_half_twist():
    from solbraid.braids import permutation_of
    half = BraidWord.parse("1 2 3 1 2 1", 4)
    assert permutation_of(half).images == (4, 3, 2, 1)
    result = check_dlen_sandwich(spec_of(4, ["1 2 3 1 2 1"], structure="CYCLIC"))
    assert result.status == "PASS"
    assert result.dlen_group == 1
    assert result.dlen_image == 1


def test_sandwich_skipped_without_structure():
    assert check_dlen_sandwich(spec_of(3, ["1"])).status == "SKIPPED"


def test_sandwich_rejects_false_disjoint_declaration():
    with pytest.raises(StructureContradiction):
        check_dlen_sandwich(spec_of(3, ["1", "2"], structure="DISJOINT_TWISTS"))


def test_sandwich_rejects_multi_generator_cyclic():
    with pytest.raises(StructureContradiction):
        check_dlen_sandwich(spec_of(4, ["1", "3"], structure="CYCLIC"))


def test_verify_kernel_abelian_disjoint_twists():
    result = verify_kernel_abelian(spec_of(4, ["1", "3"]), max_len=3)
    assert result.status == "PASS"
    assert result.linking_rank == 2


def test_verify_kernel_abelian_single_twist():
    result = verify_kernel_abelian(spec_of(3, ["1"]), max_len=4)
    assert result.status == "PASS"
    assert result.linking_rank == 1


def test_verify_kernel_abelian_not_applicable_with_positive_entropy():
    result = verify_kernel_abelian(spec_of(3, ["1 1", "2 2"]), max_len=2)
    assert result.status == "NOT_APPLICABLE"
    assert "positive entropy" in result.reason


def test_emit_report_json_shape():
    report = analyze(spec_of(4, ["1", "3"], structure="DISJOINT_TWISTS"), FAST)
    doc = json.loads(emit_report(report, "json"))
    assert list(doc.keys()) == ["schema", "spec", "perm_image", "entropy", "kernel", "verdict"]
    assert doc["schema"] == "solbraid-report/1"
    assert doc["perm_image"]["order"] == 4
    assert doc["verdict"]["theorem"] == "CONSISTENT"


def test_emit_report_text_and_unknown_format():
    report = analyze(spec_of(3, ["1"]), FAST)
    text = emit_report(report, "text")
    assert "permutation image" in text
    assert "verdict: CONSISTENT" in text
    with pytest.raises(ValueError):
        emit_report(report, "yaml")


def test_report_is_deterministic():
    spec = spec_of(5, ["1 2 3 4", "1"])
    first = emit_report(analyze(spec, FAST), "json")
    second = emit_report(analyze(spec, FAST), "json")
    assert first == second


def test_unsolvable_dlen_serializes():
    report = analyze(spec_of(5, ["1 2 3 4", "1"]), FAST)
    doc = report_to_mapping(report)
    assert doc["perm_image"]["derived_length"] == "UNSOLVABLE"


def test_certificate_coherence_on_reports():
    for spec in (
        spec_of(5, ["1 2 3 4", "1"]),
        spec_of(3, ["1 1", "2 2"]),
        spec_of(3, ["1 -2"]),
    ):
        report = analyze(spec, FAST)
        cert = report.certificate
        if cert is not None:
            assert cert.dynnikov_estimate >= cert.burau_lower_bound - 5e-3
            if cert.rigorous:
                assert cert.burau_lower_bound > 0


def test_theorem_soundness_on_random_specs():
    # whenever the permutation image is unsolvable, the search must produce a
    # positive-entropy certificate within a short word budget
    rng = random.Random(20260811)
    cfg = AnalysisConfig(entropy=EntropyConfig(iterations=100, seeds=2))
    checked = unsolvable = 0
    while checked < 100:
        n = rng.randint(3, 5)
        k = rng.randint(1, 3)
        words = []
        for _ in range(k):
            length = rng.randint(1, 6)
            words.append(BraidWord(n, tuple(
                rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))))
        spec = SubgroupSpec.from_words(n, words)
        checked += 1
        from solbraid.braids import permutation_of
        from solbraid.permgroups import derived_length, generate_closure
        image = generate_closure([permutation_of(w) for _, w in spec.generators])
        if derived_length(image) is not UNSOLVABLE:
            continue
        unsolvable += 1
        cert = find_positive_entropy(spec, max_len=5, config=cfg)
        assert cert is not EXHAUSTED, spec
        assert cert.dynnikov_estimate > 0
    assert unsolvable > 5  # the sample exercises the unsolvable branch
