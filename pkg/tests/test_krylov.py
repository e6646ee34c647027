"""Tests for the real-time subspace ladder, GEVP and gap extraction."""

import numpy as np
import pytest

from liokry import numerics
from liokry.catmodel import TraceZeroSampler, sample_initial
from liokry.errors import (
    AllSingularError,
    DimensionError,
    GrowthError,
    UnderflowError,
    WindingWarning,
)
from liokry.fock import FockOperator, FockSpace, KerrCatParams, destroy, number
from liokry.krylov import (
    GapEstimate,
    KrylovConfig,
    KrylovData,
    build_basis,
    conditioning_report,
    filter_profile,
    reconstruct_eigenstate,
    slice_data,
    solve_gevp,
)
from liokry.liouville import (
    Superket,
    Superoperator,
    dissipator_superop,
    full_spectrum_oracle,
    hamiltonian_superop,
    kerr_cat_liouvillian,
    vectorize,
)


def pure_loss(n, kappa=1.0):
    return dissipator_superop(destroy(FockSpace(n)), kappa)


def coherence_state(n, i=0, j=1):
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = m[j, i] = 1.0 / np.sqrt(2.0)
    return vectorize(m)


def population_state(n):
    m = np.zeros((n, n), dtype=complex)
    m[1, 1] = 1.0
    return vectorize(m)


def orthonormal_hermitian_data(lbar_diag, tau=1.0, generator_norm=3.0):
    """KrylovData with orthonormal Hermitian basis columns and given L-bar."""
    col0 = np.zeros((2, 2), dtype=complex)
    col0[0, 0], col0[1, 1] = 1.0 / np.sqrt(2.0), -1.0 / np.sqrt(2.0)
    col1 = np.zeros((2, 2), dtype=complex)
    col1[0, 1] = col1[1, 0] = 1.0 / np.sqrt(2.0)
    basis = np.stack([col0.reshape(-1), col1.reshape(-1)], axis=1)
    lbar = np.diag(np.asarray(lbar_diag, dtype=complex))
    return KrylovData(
        basis=basis,
        overlap=np.eye(2, dtype=complex),
        projected_generator=lbar,
        shifted_overlap=np.diag(np.exp(np.asarray(lbar_diag) * tau)).astype(complex),
        column_norms=np.ones(2),
        tau=tau,
        generator_norm=generator_norm,
    )


class TestKrylovConfig:
    def test_dimension_must_be_positive(self):
        with pytest.raises(ValueError):
            KrylovConfig(0, 1.0)

    def test_tau_must_be_positive(self):
        with pytest.raises(ValueError):
            KrylovConfig(4, 0.0)

    def test_threshold_range(self):
        with pytest.raises(ValueError):
            KrylovConfig(4, 1.0, threshold=1.0)
        with pytest.raises(ValueError):
            KrylovConfig(4, 1.0, threshold=0.0)

    def test_method_enum(self):
        with pytest.raises(ValueError):
            KrylovConfig(4, 1.0, method="qr")


class TestBuildBasis:
    def test_single_column(self):
        liou = pure_loss(2)
        rho0 = coherence_state(2)
        data = build_basis(liou, rho0, KrylovConfig(1, 0.5))
        assert data.overlap.shape == (1, 1)
        assert data.overlap[0, 0] == pytest.approx(1.0, abs=1e-14)
        expected = np.vdot(rho0.vec, liou.matrix @ rho0.vec)
        assert data.projected_generator[0, 0] == pytest.approx(expected, abs=1e-14)

    def test_zero_generator_gives_all_ones_overlap(self):
        liou = Superoperator(FockSpace(2), np.zeros((4, 4), dtype=complex))
        data = build_basis(liou, coherence_state(2), KrylovConfig(5, 1.0))
        assert np.allclose(data.overlap, np.ones((5, 5)), atol=1e-14)
        s = np.linalg.svd(data.overlap, compute_uv=False)
        assert s[1] <= 1e-12 * s[0]

    def test_pure_loss_population_rank_two_closed_form(self):
        # rho(t) = P0 + e^{-kt}(P1 - P0) gives
        # S_ij = 1 - e^{-k tau i} - e^{-k tau j} + 2 e^{-k tau (i+j)}
        kappa, tau, d = 1.0, 0.8, 5
        data = build_basis(pure_loss(2, kappa), population_state(2), KrylovConfig(d, tau))
        decay = np.exp(-kappa * tau * np.arange(d))
        expected = 1.0 - decay[:, None] - decay[None, :] + 2.0 * np.outer(decay, decay)
        assert np.allclose(data.overlap, expected, atol=1e-12)
        s = np.linalg.svd(data.overlap, compute_uv=False)
        assert s[1] > 1e-3 * s[0]
        assert s[2] <= 1e-12 * s[0]

    def test_trace_zero_population_state_is_single_mode(self):
        # (P1 - P0)/sqrt(2) is an exact eigenmode, so S is rank 1
        n = 2
        m = np.zeros((n, n), dtype=complex)
        m[1, 1], m[0, 0] = 1.0 / np.sqrt(2.0), -1.0 / np.sqrt(2.0)
        data = build_basis(pure_loss(n), vectorize(m), KrylovConfig(4, 0.6))
        s = np.linalg.svd(data.overlap, compute_uv=False)
        assert s[1] <= 1e-12 * s[0]

    def test_column_norms_decay_for_dissipative_generator(self):
        data = build_basis(pure_loss(2), coherence_state(2), KrylovConfig(6, 1.0))
        expected = np.exp(-0.5 * np.arange(6))
        assert np.allclose(data.column_norms, expected, rtol=1e-12)

    def test_overlap_hermitian_psd(self):
        liou = kerr_cat_liouvillian(FockSpace(6), KerrCatParams(drive=0.15))
        sampler = TraceZeroSampler(3, n_pairs=2)
        rho0 = sample_initial(sampler, FockSpace(6), KerrCatParams(drive=0.15))
        data = build_basis(liou, rho0, KrylovConfig(6, 0.7))
        s = data.overlap
        assert np.linalg.norm(s - s.conj().T) <= 1e-12 * np.linalg.norm(s)
        eigs = np.linalg.eigvalsh(0.5 * (s + s.conj().T))
        assert eigs.min() >= -1e-10 * eigs.max()

    def test_requires_unit_norm(self):
        liou = pure_loss(2)
        bad = Superket(FockSpace(2), 2.0 * coherence_state(2).vec)
        with pytest.raises(ValueError):
            build_basis(liou, bad, KrylovConfig(3, 1.0))

    def test_requires_matching_space(self):
        with pytest.raises(DimensionError):
            build_basis(pure_loss(3), coherence_state(2), KrylovConfig(3, 1.0))

    def test_underflow_when_evolution_too_long(self):
        with pytest.raises(UnderflowError):
            build_basis(pure_loss(2), coherence_state(2), KrylovConfig(3, 1500.0))

    def test_precomputed_propagator_matches(self):
        liou = pure_loss(3)
        rho0 = coherence_state(3)
        cfg = KrylovConfig(4, 0.9)
        direct = build_basis(liou, rho0, cfg)
        prop = numerics.expm(liou.matrix * cfg.tau)
        shared = build_basis(liou, rho0, cfg, propagator=prop)
        assert np.array_equal(direct.basis, shared.basis)
        assert np.array_equal(direct.overlap, shared.overlap)

    def test_propagator_shape_validated(self):
        with pytest.raises(DimensionError):
            build_basis(
                pure_loss(2), coherence_state(2), KrylovConfig(3, 1.0), propagator=np.eye(3)
            )


class TestSliceData:
    def test_slices_are_nested_leading_blocks(self):
        liou = pure_loss(3)
        full = build_basis(liou, coherence_state(3), KrylovConfig(6, 0.5))
        part = slice_data(full, 3)
        assert np.array_equal(part.overlap, full.overlap[:3, :3])
        assert np.array_equal(part.basis, full.basis[:, :3])
        direct = build_basis(liou, coherence_state(3), KrylovConfig(3, 0.5))
        assert np.array_equal(part.basis, direct.basis)
        assert np.allclose(part.overlap, direct.overlap, rtol=1e-13)

    def test_range_checked(self):
        full = build_basis(pure_loss(2), coherence_state(2), KrylovConfig(4, 0.5))
        with pytest.raises(ValueError):
            slice_data(full, 0)
        with pytest.raises(ValueError):
            slice_data(full, 5)


class TestSolveGevp:
    def test_decoupled_modes_gap(self):
        data = orthonormal_hermitian_data([-1.0, -2.0])
        est = solve_gevp(data, KrylovConfig(2, 1.0))
        assert est.gap == pytest.approx(1.0, abs=1e-12)
        assert est.kept_rank == 2
        assert np.allclose(np.sort(est.ritz_values.real), [-2.0, -1.0], atol=1e-12)

    def test_transfer_matrix_recovers_pure_loss_rate(self):
        kappa = 1.0
        data = build_basis(
            pure_loss(2, kappa),
            coherence_state(2),
            KrylovConfig(4, 1.0, method="transfer_matrix"),
        )
        est = solve_gevp(data, KrylovConfig(4, 1.0, method="transfer_matrix"))
        assert est.gap == pytest.approx(kappa / 2.0, abs=1e-8)

    def test_all_singular_error(self):
        dead = KrylovData(
            basis=np.zeros((4, 2), dtype=complex),
            overlap=np.zeros((2, 2), dtype=complex),
            projected_generator=np.zeros((2, 2), dtype=complex),
            shifted_overlap=np.zeros((2, 2), dtype=complex),
            column_norms=np.zeros(2),
            tau=1.0,
            generator_norm=1.0,
        )
        with pytest.raises(AllSingularError):
            solve_gevp(dead, KrylovConfig(2, 1.0))

    def test_growth_error_for_expanding_transfer(self):
        data = orthonormal_hermitian_data([-1.0, -2.0])
        grown = KrylovData(
            basis=data.basis,
            overlap=data.overlap,
            projected_generator=data.projected_generator,
            shifted_overlap=np.diag([1.5, 0.5]).astype(complex),
            column_norms=data.column_norms,
            tau=data.tau,
            generator_norm=data.generator_norm,
        )
        with pytest.raises(GrowthError):
            solve_gevp(grown, KrylovConfig(2, 1.0, method="transfer_matrix"))

    def test_winding_warning_near_branch_cut(self):
        # omega tau = 3 rad sits inside the 0.9 pi guard band
        space = FockSpace(2)
        omega, tau = 2.0, 1.5
        liou = hamiltonian_superop(FockOperator(space, omega * number(space).matrix))
        cfg = KrylovConfig(3, tau, method="transfer_matrix")
        data = build_basis(liou, coherence_state(2), cfg)
        with pytest.warns(WindingWarning):
            est = solve_gevp(data, cfg)
        assert est.gap is None
        # 3 rad is still inside the principal branch, so frequencies are exact
        got = np.sort(est.ritz_values.imag)
        assert np.allclose(got, [-omega, omega], atol=1e-9)

    def test_unitary_case_keeps_oscillatory_ritz_values(self):
        space = FockSpace(2)
        liou = hamiltonian_superop(FockOperator(space, 1.3 * number(space).matrix))
        cfg = KrylovConfig(3, 0.5)
        est = solve_gevp(build_basis(liou, coherence_state(2), cfg), cfg)
        assert est.gap is None
        assert est.slow_index is None
        assert est.filter_weights is None
        assert est.ritz_values.size >= 2

    def test_ritz_values_inside_numerical_range(self):
        space = FockSpace(5)
        p = KerrCatParams(delta=0.3, kerr=0.08, drive=0.2, kappa_1ph=1.0)
        liou = kerr_cat_liouvillian(space, p)
        rho0 = sample_initial(TraceZeroSampler(12, n_pairs=2), space, p)
        cfg = KrylovConfig(8, 0.6)
        est = solve_gevp(build_basis(liou, rho0, cfg), cfg)
        herm = 0.5 * (liou.matrix + liou.matrix.conj().T)
        fov_edge = float(np.linalg.eigvalsh(herm).max())
        bound = fov_edge + 1e-8 * np.linalg.norm(liou.matrix)
        assert est.ritz_values.real.max() <= bound

    def test_oracle_equivalence_on_small_toy(self):
        # four distinct rates excited; ritz values must match all of them
        n, kappa, tau = 3, 1.0, 0.5
        liou = pure_loss(n, kappa)
        m = np.zeros((n, n), dtype=complex)
        m[0, 1] = m[1, 0] = 0.6
        m[1, 2] = m[2, 1] = 0.4
        m[1, 1], m[0, 0] = 0.3, -0.3
        m[2, 2], m[0, 0] = 0.2, m[0, 0] - 0.2
        rho0 = vectorize(m / np.linalg.norm(m))
        cfg = KrylovConfig(6, tau)
        est = solve_gevp(build_basis(liou, rho0, cfg), cfg)
        expected = np.array([-0.5, -1.0, -1.5, -2.0]) * kappa
        got = np.sort(est.ritz_values.real)[-4:]
        assert np.allclose(np.sort(expected), got, rtol=1e-6)

    def test_methods_cross_validate(self):
        space = FockSpace(8)
        p = KerrCatParams(delta=0.2, kerr=0.05, drive=0.12, kappa_1ph=1.0)
        liou = kerr_cat_liouvillian(space, p)
        rho0 = sample_initial(TraceZeroSampler(21, n_pairs=3), space, p)
        gaps = {}
        for method in ("projected_generator", "transfer_matrix"):
            cfg = KrylovConfig(10, 1.2, method=method)
            est = solve_gevp(build_basis(liou, rho0, cfg), cfg)
            assert est.kept_rank >= 2
            gaps[method] = est.gap
        a, b = gaps["projected_generator"], gaps["transfer_matrix"]
        assert abs(a - b) <= 0.01 * min(a, b)

    def test_norm_decay_beyond_transient(self):
        space = FockSpace(8)
        p = KerrCatParams(delta=0.2, kerr=0.05, drive=0.1, kappa_1ph=1.0)
        liou = kerr_cat_liouvillian(space, p)
        rho0 = sample_initial(TraceZeroSampler(8, n_pairs=3), space, p)
        tau = 1.0
        data = build_basis(liou, rho0, KrylovConfig(12, tau))
        gap = full_spectrum_oracle(liou).gap
        k0 = int(np.ceil(3.0 / (gap * tau)))
        assert k0 < 11, "transient too long for this test configuration"
        tail = data.column_norms[k0:]
        assert (np.diff(tail) < 0).all()

    def test_super_nyquist_dissipative_recovery(self):
        # tau times the coherent spectral width far exceeds pi, yet the
        # decay rate comes back exactly; only phases can alias
        space = FockSpace(2)
        delta, kappa, tau = 4.0, 1.0, 2.0
        h = FockOperator(space, delta * number(space).matrix)
        liou = hamiltonian_superop(h) + pure_loss(2, kappa)
        cfg = KrylovConfig(4, tau, method="transfer_matrix")
        est = solve_gevp(build_basis(liou, coherence_state(2), cfg), cfg)
        assert est.gap == pytest.approx(kappa / 2.0, rel=1e-6)

    def test_unitary_aliasing_modulo_sampling_frequency(self):
        space = FockSpace(2)
        omega, tau = 2.0, 2.5
        liou = hamiltonian_superop(FockOperator(space, omega * number(space).matrix))
        cfg = KrylovConfig(3, tau, method="transfer_matrix")
        est = solve_gevp(build_basis(liou, coherence_state(2), cfg), cfg)
        assert est.gap is None
        recovered = est.ritz_values.imag.max()
        assert abs(recovered - omega) > 0.5  # aliased, not the true frequency
        # the -omega mode wraps up by one sampling frequency 2 pi / tau
        assert recovered == pytest.approx(2.0 * np.pi / tau - omega, abs=1e-9)
        assert est.ritz_values.imag.min() == pytest.approx(
            omega - 2.0 * np.pi / tau, abs=1e-9
        )


class TestReconstructEigenstate:
    def test_decoupled_toy_returns_basis_column(self):
        data = orthonormal_hermitian_data([-1.0, -2.0])
        est = solve_gevp(data, KrylovConfig(2, 1.0))
        rec = reconstruct_eigenstate(data, est, est.slow_index)
        overlap = abs(np.vdot(rec.vec, data.basis[:, 0]))
        assert overlap == pytest.approx(1.0, abs=1e-12)

    def test_pure_loss_slow_mode_overlap(self):
        n = 5
        liou = pure_loss(n)
        m = np.zeros((n, n), dtype=complex)
        m[0, 1] = m[1, 0] = 0.5
        m[1, 1], m[0, 0] = 0.4, -0.4
        rho0 = vectorize(m / np.linalg.norm(m))
        cfg = KrylovConfig(6, 0.8)
        data = build_basis(liou, rho0, cfg)
        est = solve_gevp(data, cfg)
        rec = reconstruct_eigenstate(data, est, est.slow_index)
        analytic = coherence_state(n)
        assert abs(np.vdot(analytic.vec, rec.vec)) >= 0.999

    def test_index_out_of_range(self):
        data = orthonormal_hermitian_data([-1.0, -2.0])
        est = solve_gevp(data, KrylovConfig(2, 1.0))
        with pytest.raises(IndexError):
            reconstruct_eigenstate(data, est, est.ritz_values.size)

    def test_reconstruction_is_hermitian(self):
        space = FockSpace(6)
        p = KerrCatParams(delta=0.2, kerr=0.05, drive=0.1, kappa_1ph=1.0)
        liou = kerr_cat_liouvillian(space, p)
        rho0 = sample_initial(TraceZeroSampler(31, n_pairs=2), space, p)
        cfg = KrylovConfig(8, 1.0)
        data = build_basis(liou, rho0, cfg)
        est = solve_gevp(data, cfg)
        m = rec = reconstruct_eigenstate(data, est, est.slow_index)
        m = rec.vec.reshape(6, 6)
        assert np.linalg.norm(m - m.conj().T) <= 1e-10 * np.linalg.norm(m)
        assert rec.norm() == pytest.approx(1.0, abs=1e-12)


class TestFilterProfile:
    def test_delta_in_time_is_flat(self):
        lam = np.array([-0.1, -0.5 + 2j, -3.0])
        w = np.array([1.0, 0.0, 0.0, 0.0])
        assert np.allclose(filter_profile(w, 0.7, lam), 1.0, atol=1e-14)

    def test_uniform_weights_give_dirichlet_kernel(self):
        d, tau = 8, 0.4
        w = np.full(d, 1.0 / d)
        omegas = np.linspace(-2.0, 2.0, 41)
        got = filter_profile(w, tau, 1j * omegas)
        with np.errstate(divide="ignore", invalid="ignore"):
            num = np.sin(0.5 * d * omegas * tau)
            den = np.sin(0.5 * omegas * tau)
            expected = np.where(np.abs(den) < 1e-12, 1.0, (num / (d * den)) ** 2)
        assert np.allclose(got, expected, atol=1e-10)
        assert got.argmax() == np.abs(omegas).argmin()

    def test_slow_mode_weights_favor_slow_mode(self):
        n = 4
        liou = pure_loss(n)
        m = np.zeros((n, n), dtype=complex)
        m[0, 1] = m[1, 0] = 0.5
        m[1, 2] = m[2, 1] = 0.3
        m[1, 1], m[0, 0] = 0.4, -0.4
        rho0 = vectorize(m / np.linalg.norm(m))
        cfg = KrylovConfig(6, 0.7)
        data = build_basis(liou, rho0, cfg)
        est = solve_gevp(data, cfg)
        lam_slow = est.ritz_values[est.slow_index]
        faster = est.ritz_values[est.ritz_values.real < lam_slow.real - 1e-9]
        # weights act on whitened coordinates; compare in the original ladder
        # by padding the kept weights back to length D via the basis map
        profile = filter_profile(
            data.basis.conj().T @ (data.basis @ est.filter_weights), data.tau, est.ritz_values
        )
        slow_value = filter_profile(
            data.basis.conj().T @ (data.basis @ est.filter_weights),
            data.tau,
            np.array([lam_slow]),
        )[0]
        for lam in faster:
            value = filter_profile(
                data.basis.conj().T @ (data.basis @ est.filter_weights),
                data.tau,
                np.array([lam]),
            )[0]
            assert slow_value > value
        assert profile.size == est.ritz_values.size


class TestConditioningReport:
    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            conditioning_report(pure_loss(2), coherence_state(2), [])

    def test_condition_number_grows_with_dimension(self):
        space = FockSpace(6)
        p = KerrCatParams(delta=0.2, kerr=0.05, drive=0.1, kappa_1ph=1.0)
        liou = kerr_cat_liouvillian(space, p)
        rho0 = sample_initial(TraceZeroSampler(77, n_pairs=2), space, p)
        grid = [KrylovConfig(d, 0.5) for d in (3, 4, 5, 6)]
        rows = conditioning_report(liou, rho0, grid)
        conds = [row.cond_s for row in rows]
        assert all(b >= a for a, b in zip(conds, conds[1:]))
        assert all(row.gap_oracle == rows[0].gap_oracle for row in rows)

    @pytest.mark.filterwarnings("ignore::liokry.errors.DegeneracyWarning")
    def test_zero_generator_marks_infinite_condition(self):
        liou = Superoperator(FockSpace(2), np.zeros((4, 4), dtype=complex))
        rows = conditioning_report(liou, coherence_state(2), [KrylovConfig(3, 1.0)])
        assert rows[0].cond_s == np.inf
        assert rows[0].gap_oracle is None
        assert rows[0].gap_krylov is None

    def test_longer_tau_improves_gap_estimate(self):
        space = FockSpace(8)
        p = KerrCatParams(delta=0.2, kerr=0.05, drive=0.1, kappa_1ph=1.0)
        liou = kerr_cat_liouvillian(space, p)
        rho0 = sample_initial(TraceZeroSampler(91, n_pairs=3), space, p)
        rows = conditioning_report(
            liou, rho0, [KrylovConfig(6, 0.05), KrylovConfig(6, 1.5)]
        )
        oracle = rows[0].gap_oracle
        err_short = abs(rows[0].gap_krylov - oracle) / oracle
        err_long = abs(rows[1].gap_krylov - oracle) / oracle
        assert err_long < err_short
