import dataclasses

import pytest

from cloee import (
    FRAME_CONSTANTS,
    MODE_TABLE,
    EnergyParams,
    energy_breakdown,
    mode_for,
    overhead_energy,
    payload_energy_per_bit,
    startup_energy,
)

ZERO_POWER = EnergyParams(eps_p=1e-12, p_cor=0, p_adc=0, p_lna=0, p_vga=0,
                          p_syn=0, p_gen=0, t_st=0)


class TestStartupEnergy:
    def test_default(self):
        assert startup_energy() == pytest.approx(24.48e-6, rel=1e-12)

    def test_zero_cases(self):
        assert startup_energy(dataclasses.replace(EnergyParams(), t_st=0.0)) == 0.0
        assert startup_energy(dataclasses.replace(EnergyParams(), p_syn=0.0)) == 0.0


class TestPayloadEnergy:
    def test_reference_point(self):
        # 20 pJ pulse + 72.08 mW of circuits over one 64.1 ns symbol
        assert payload_energy_per_bit(mode_for(1)) == pytest.approx(4.640500992e-9, rel=1e-12)

    def test_pulse_energy_only(self):
        assert payload_energy_per_bit(mode_for(8), ZERO_POWER) == pytest.approx(8e-12, rel=1e-12)

    def test_monotone_in_burst_order(self):
        values = [payload_energy_per_bit(m) for m in MODE_TABLE]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_scales_linearly_across_mode_table(self):
        # Fixed 1/32 duty cycle makes t_sym proportional to n_cpb, so both the
        # pulse and circuit terms scale together: eps_b is exactly linear in
        # n_cpb along the table rows.
        base = payload_energy_per_bit(mode_for(1))
        for mode in MODE_TABLE:
            assert payload_energy_per_bit(mode) == pytest.approx(mode.n_cpb * base, rel=1e-12)

    def test_soft_decision_term_presence(self):
        mode = mode_for(4)
        ep = EnergyParams()
        soft = dataclasses.replace(ep, rho_c=1)
        assert payload_energy_per_bit(mode, soft) - payload_energy_per_bit(mode, ep) == \
            pytest.approx(ep.p_adc * mode.t_sym, rel=1e-12)

    def test_coherent_term_presence(self):
        mode = mode_for(4)
        ep = EnergyParams()
        coherent = dataclasses.replace(ep, rho_r=1)
        assert payload_energy_per_bit(mode, coherent) - payload_energy_per_bit(mode, ep) == \
            pytest.approx((ep.p_gen + ep.p_syn) * mode.t_sym, rel=1e-12)


class TestOverheadEnergy:
    def test_pulse_count_only(self):
        # 4*315 preamble pulses + 32*40 header pulses at 1 pJ each
        assert overhead_energy(ep=ZERO_POWER) == pytest.approx(2540e-12, rel=1e-12)

    def test_reference_point(self):
        # pulses + (p_syn + rx chain) * 122.372 us; hard-decision non-coherent
        # receiver, so no ADC / generator / synthesizer terms on the rx side.
        assert overhead_energy() == pytest.approx(8.87137376e-6, rel=1e-12)

    def test_zero_duration_headers(self):
        consts = dataclasses.replace(FRAME_CONSTANTS, t_shr=0.0, t_phr=0.0)
        assert overhead_energy(consts) == pytest.approx(2540 * 20e-12, rel=1e-12)


class TestHomogeneity:
    def test_energy_scales_with_power_constants(self):
        ep = EnergyParams()
        scaled = EnergyParams(
            eps_p=3 * ep.eps_p, p_cor=3 * ep.p_cor, p_adc=3 * ep.p_adc,
            p_lna=3 * ep.p_lna, p_vga=3 * ep.p_vga, p_syn=3 * ep.p_syn,
            p_gen=3 * ep.p_gen, t_st=ep.t_st,
        )
        mode = mode_for(16)
        assert payload_energy_per_bit(mode, scaled) == pytest.approx(
            3 * payload_energy_per_bit(mode, ep), rel=1e-12)
        assert overhead_energy(ep=scaled) == pytest.approx(3 * overhead_energy(ep=ep), rel=1e-12)
        assert startup_energy(scaled) == pytest.approx(3 * startup_energy(ep), rel=1e-12)


class TestEnergyBreakdown:
    def test_total_composition(self):
        b = energy_breakdown(mode_for(32))
        assert b.eps_st == pytest.approx(24.48e-6, rel=1e-12)
        assert b.total(1000) == pytest.approx(1000 * b.eps_b + b.eps_oh + b.eps_st, rel=1e-12)
        assert b.total(2000) > b.total(1000)
        assert b.eps_fixed == b.eps_oh + b.eps_st

    def test_validation(self):
        with pytest.raises(ValueError):
            EnergyParams(eps_p=-1e-12)
        with pytest.raises(ValueError):
            EnergyParams(rho_r=2)
