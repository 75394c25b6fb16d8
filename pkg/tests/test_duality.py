import pytest

from slidepol import (
    NotDeterminedError,
    ZeroIdealError,
    alexander_dual,
    dual_slide_correspondence,
    parse_ideal,
    slide_ideal,
)
from slidepol.core import MonomialIdeal
from slidepol.harness import HarnessConfig, child_rng, random_ideal


class TestAlexanderDual:
    def test_squarefree_example(self, example_ideal, r4):
        assert alexander_dual(example_ideal, (1, 1, 1, 1)) == parse_ideal(
            "x*y, x*w, y*w, z*w", r4
        )

    def test_slid_example_same_dual(self, r4):
        slid = parse_ideal("x^2*y*z, x^2*w, y*w", r4)
        assert alexander_dual(slid, (2, 1, 1, 1)) == parse_ideal("x*y, x*w, y*w, z*w", r4)

    def test_bumped_vector_changes_dual(self, example_ideal, r4):
        assert alexander_dual(example_ideal, (2, 1, 1, 1)) == parse_ideal(
            "x^2*y, x^2*w, y*w, z*w", r4
        )

    def test_zero_ideal_rejected(self, r2):
        with pytest.raises(ZeroIdealError):
            alexander_dual(MonomialIdeal(r2, ()), (1, 1))

    def test_undetermined_rejected(self, r2):
        with pytest.raises(NotDeterminedError):
            alexander_dual(parse_ideal("x^2", r2), (1, 1))

    def test_involution(self):
        cfg = HarnessConfig(suite="x", trials=0, seed=321, n=3, max_exp=2, max_gens=4)
        for trial in range(60):
            rng = child_rng(cfg.seed, trial)
            ideal, a = random_ideal(cfg, trial, rng=rng)
            assert alexander_dual(alexander_dual(ideal, a), a) == ideal

    def test_squarefree_dual_generators_are_facet_complements(self):
        from slidepol import stanley_reisner_facets

        cfg = HarnessConfig(suite="x", trials=0, seed=987, n=4, max_exp=1, max_gens=4)
        for trial in range(50):
            rng = child_rng(cfg.seed, trial)
            ideal, _ = random_ideal(cfg, trial, rng=rng)
            n = ideal.ring.n
            complements = sorted(
                tuple(0 if f >> k & 1 else 1 for k in range(n))
                for f in stanley_reisner_facets(ideal).facets
            )
            dual = alexander_dual(ideal, (1,) * n)
            assert complements == list(dual.gens), ideal


class TestDualSlideCorrespondence:
    def test_worked_example_pairing_is_fixed(self, example_ideal):
        report = dual_slide_correspondence(example_ideal, (1, 1, 1, 1), 1, 1)
        assert report.success
        # tau at the reflected threshold 2 fixes all four dual generators
        assert all(b == image for b, image in report.pairs)

    def test_principal_ideal(self, r1):
        ideal = parse_ideal("x", r1)
        report = dual_slide_correspondence(ideal, (1,), 1, 1)
        assert report.success
        assert report.pairs == (((1,), (1,)),)

    def test_random_instances(self):
        cfg = HarnessConfig(suite="x", trials=0, seed=654, n=3, max_exp=2, max_gens=4)
        for trial in range(60):
            rng = child_rng(cfg.seed, trial)
            ideal, a = random_ideal(cfg, trial, rng=rng)
            i = rng.randint(1, ideal.ring.n)
            j = rng.randint(1, a[i - 1] + 1)
            report = dual_slide_correspondence(ideal, a, i, j)
            assert report.success, (ideal, a, i, j, report)

    def test_threshold_out_of_range(self, example_ideal):
        with pytest.raises(ValueError):
            dual_slide_correspondence(example_ideal, (1, 1, 1, 1), 1, 3)

    def test_image_counts_match_generator_counts(self, r4):
        ideal = parse_ideal("x^2*y, y*z^2, z*w", r4)
        a = (2, 1, 2, 1)
        report = dual_slide_correspondence(ideal, a, 3, 2)
        assert report.success
        slid_dual = alexander_dual(slide_ideal(ideal, 3, 2), (2, 1, 3, 1))
        assert len(report.pairs) == len(slid_dual.gens)
