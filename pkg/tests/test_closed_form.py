import math

import numpy as np
import pytest
from scipy.integrate import quad

from arcppn import (
    ClosedFormInputs,
    DomainError,
    GuidanceParams,
    InsufficientEnergyError,
    SpeedProfile,
    closing_speed_at,
    curvature_at,
    curvature_increment,
    flight_path_length,
    flight_time_under_constant_drag,
    leading_angle_at,
    los_rate_at,
    max_curvature,
    max_relative_distance,
    profile,
    radius_at_leading_angle,
    terminal_impact_angle,
    wrap_angle,
)

R0 = 20000.0
Q0 = math.radians(-120.0)

# independent scipy evaluation of the flight-path integral, frozen:
#   quad(sin(t)^(-(N-2)/(N-1)), 0, theta0) scaled by r0/((N-1) sin(theta0)^(1/(N-1)))
SCIPY_PATHS = {
    (3.0, 30.0): 20561.13602104258,
    (3.0, 60.0): 22414.264339092577,
    (3.0, 90.0): 26220.575542921113,
    (3.0, 120.0): 33937.41980796911,
    (4.0, 120.0): 29259.57536042273,
    (5.0, 120.0): 26936.63830586764,
    (6.0, 120.0): 25546.574042743432,
    (2.5, 120.0): 38672.11358988742,
}


def inputs_for(gain: float, theta0_deg: float, r0: float = R0) -> ClosedFormInputs:
    return ClosedFormInputs(r0, math.radians(theta0_deg), Q0, GuidanceParams(gain))


class TestLosRate:
    def test_initial_condition(self):
        inp = inputs_for(3.0, 120.0)
        assert los_rate_at(inp, R0) == pytest.approx(inp.q_prime0, rel=1e-14)

    def test_gain_two_constant(self):
        inp = inputs_for(2.0, 60.0)
        for r in (R0, 0.5 * R0, 0.01 * R0):
            assert los_rate_at(inp, r) == pytest.approx(inp.q_prime0, rel=1e-13)

    def test_half_range_value(self):
        inp = inputs_for(3.0, 120.0)
        assert los_rate_at(inp, 10000.0) == pytest.approx(-2.16506e-5, rel=1e-5)
        assert los_rate_at(inp, 10000.0) == pytest.approx(0.5 * inp.q_prime0, rel=1e-13)

    def test_out_of_range_rejected(self):
        inp = inputs_for(3.0, 60.0)
        with pytest.raises(DomainError):
            los_rate_at(inp, 0.0)
        with pytest.raises(DomainError):
            los_rate_at(inp, 1.01 * R0)


class TestClosingSpeed:
    def test_turning_point_stalls(self):
        inp = inputs_for(3.0, 120.0)
        r_max = max_relative_distance(inp)
        assert closing_speed_at(inp, r_max) == pytest.approx(0.0, abs=1e-8)

    def test_terminal_collision_course(self):
        inp = inputs_for(3.0, 120.0)
        assert closing_speed_at(inp, 1e-3) == pytest.approx(-1.0, abs=1e-12)

    def test_branch_signs_at_launch(self):
        inp = inputs_for(3.0, 120.0)
        assert closing_speed_at(inp, R0, branch="outbound") == pytest.approx(0.5, rel=1e-12)
        assert closing_speed_at(inp, R0, branch="inbound") == pytest.approx(-0.5, rel=1e-12)
        # auto picks the branch holding the launch state
        assert closing_speed_at(inp, R0) == pytest.approx(0.5, rel=1e-12)

    def test_no_outbound_branch_below_90(self):
        inp = inputs_for(3.0, 60.0)
        with pytest.raises(DomainError):
            closing_speed_at(inp, R0, branch="outbound")


class TestLeadingAngle:
    def test_launch_value(self):
        inp = inputs_for(3.0, 120.0)
        assert leading_angle_at(inp, R0) == pytest.approx(math.radians(120.0), rel=1e-12)

    def test_converges_to_zero(self):
        inp = inputs_for(3.0, 120.0)
        assert abs(leading_angle_at(inp, 1.0)) < 1e-8

    def test_inverse_round_trip_inbound(self):
        inp = inputs_for(3.0, 120.0)
        for r in (15000.0, 8000.0, 100.0):
            theta = leading_angle_at(inp, r, branch="inbound")
            assert radius_at_leading_angle(inp, theta) == pytest.approx(r, rel=1e-10)

    def test_negative_initial_angle_mirrors(self):
        pos = inputs_for(3.0, 120.0)
        neg = inputs_for(3.0, -120.0)
        for r in (18000.0, 9000.0):
            assert leading_angle_at(neg, r) == pytest.approx(-leading_angle_at(pos, r), rel=1e-12)

    def test_monotone_decrease_inbound(self):
        inp = inputs_for(3.0, 120.0)
        radii = np.linspace(max_relative_distance(inp), 1.0, 400)
        thetas = [leading_angle_at(inp, float(r), branch="inbound") for r in radii]
        assert all(b < a for a, b in zip(thetas, thetas[1:]))


class TestRadiusAtLeadingAngle:
    def test_endpoints(self):
        inp = inputs_for(3.0, 120.0)
        assert radius_at_leading_angle(inp, inp.theta_m0) == pytest.approx(R0, rel=1e-14)
        assert radius_at_leading_angle(inp, 0.0) == 0.0

    def test_turning_point_value(self):
        inp = inputs_for(3.0, 120.0)
        assert radius_at_leading_angle(inp, math.pi / 2) == pytest.approx(21491.40, rel=5e-6)

    def test_sign_mismatch_rejected(self):
        inp = inputs_for(3.0, 120.0)
        with pytest.raises(DomainError):
            radius_at_leading_angle(inp, -0.3)

    def test_supremum_matches_max_distance(self):
        for gain, theta0 in ((3.0, 120.0), (2.5, 150.0), (4.0, 60.0)):
            inp = inputs_for(gain, theta0)
            sign = math.copysign(1.0, inp.theta_m0)
            thetas = np.linspace(1e-6, abs(inp.theta_m0), 20001) * sign
            dense_sup = max(radius_at_leading_angle(inp, float(t)) for t in thetas)
            # outbound branch continues past theta0 up to 90 deg
            if abs(inp.theta_m0) > math.pi / 2:
                up = np.linspace(math.pi / 2, abs(inp.theta_m0), 20001) * sign
                dense_sup = max(dense_sup, max(radius_at_leading_angle(inp, float(t)) for t in up))
            assert max_relative_distance(inp) == pytest.approx(dense_sup, rel=1e-8)


class TestCurvature:
    def test_vanishes_toward_intercept_for_high_gain(self):
        inp = inputs_for(3.0, 120.0)
        assert abs(curvature_at(inp, 1.0)) < 1e-8

    def test_gain_two_constant_magnitude(self):
        inp = inputs_for(2.0, 120.0)
        expected = 2.0 * math.sin(math.radians(120.0)) / R0
        for r in (R0, 5000.0, 50.0):
            assert abs(curvature_at(inp, r)) == pytest.approx(expected, rel=1e-12)

    def test_peak_value_at_turning_point(self):
        inp = inputs_for(3.0, 120.0)
        r_max = max_relative_distance(inp)
        assert abs(curvature_at(inp, r_max)) == pytest.approx(1.39590e-4, rel=1e-5)
        assert abs(curvature_at(inp, r_max)) == pytest.approx(max_curvature(inp), rel=1e-12)


class TestMaxRelativeDistance:
    @pytest.mark.parametrize(
        "gain,theta0,expected",
        [
            (3.0, 120.0, 21491.40),
            (2.0, 120.0, 23094.01),
            (3.0, 60.0, 20000.0),
            (4.0, 120.0, 20982.30),
            (5.0, 120.0, 20732.29),
            (6.0, 120.0, 20583.72),
        ],
    )
    def test_reference_values(self, gain, theta0, expected):
        assert max_relative_distance(inputs_for(gain, theta0)) == pytest.approx(
            expected, rel=5e-6
        )

    def test_exact_beam_launch_on_turning_branch(self):
        # 90 deg sits on the turning-point branch; both branches agree there
        assert max_relative_distance(inputs_for(3.0, 90.0)) == pytest.approx(R0, rel=1e-14)

    def test_tail_away_diverges(self):
        with pytest.raises(DomainError):
            max_relative_distance(inputs_for(3.0, 180.0))


class TestMaxCurvature:
    def test_global_peak_at_beam_launch(self):
        inp = inputs_for(3.0, 90.0)
        assert max_curvature(inp) == pytest.approx(3.0 / R0, rel=1e-14)

    def test_zero_for_head_on(self):
        assert max_curvature(inputs_for(3.0, 0.0)) == 0.0

    def test_reference_value(self):
        assert max_curvature(inputs_for(3.0, 120.0)) == pytest.approx(1.39590e-4, rel=1e-5)

    def test_low_gain_requires_cutoff(self):
        inp = inputs_for(2.0, 120.0)
        with pytest.raises(DomainError):
            max_curvature(inp)
        assert max_curvature(inp, cutoff_radius=5000.0) == pytest.approx(
            abs(curvature_at(inp, 5000.0)), rel=1e-14
        )


class TestCurvatureIncrement:
    @pytest.mark.parametrize(
        "gain,theta0,expected",
        [
            (3.0, 120.0, 3.14159),
            (2.0, 120.0, 4.18879),
            (3.0, 30.0, 0.785398),
            (3.0, 60.0, 1.57080),
            (3.0, 90.0, 2.35619),
            (4.0, 120.0, 2.79253),
            (5.0, 120.0, 2.61799),
            (6.0, 120.0, 2.51327),
        ],
    )
    def test_reference_values(self, gain, theta0, expected):
        assert curvature_increment(inputs_for(gain, theta0)) == pytest.approx(expected, rel=5e-6)

    def test_head_on_zero(self):
        assert curvature_increment(inputs_for(3.0, 0.0)) == 0.0

    @pytest.mark.parametrize("gain,theta0", [(3.0, 30.0), (3.0, 60.0), (2.5, 45.0)])
    def test_matches_radius_quadrature(self, gain, theta0):
        # independent route: integrate |k(r)| ds with ds = dr/|r'| over the
        # inbound branch (single-branch geometries only)
        inp = inputs_for(gain, theta0)

        def integrand(r):
            return abs(curvature_at(inp, r)) / abs(closing_speed_at(inp, r, branch="inbound"))

        value, _ = quad(integrand, 0.0, R0, limit=300)
        assert value == pytest.approx(curvature_increment(inp), rel=1e-6)


class TestFlightPath:
    def test_gain_two_exact(self):
        inp = inputs_for(2.0, 120.0)
        exact = R0 * math.radians(120.0) / math.sin(math.radians(120.0))
        assert flight_path_length(inp) == exact
        assert exact == pytest.approx(48367.98, abs=0.05)

    @pytest.mark.parametrize("key,expected", sorted(SCIPY_PATHS.items()))
    def test_against_scipy_oracle(self, key, expected):
        gain, theta0 = key
        assert flight_path_length(inputs_for(gain, theta0)) == pytest.approx(
            expected, rel=1e-9
        )

    def test_head_on_straight_line(self):
        assert flight_path_length(inputs_for(3.0, 0.0)) == R0

    def test_tail_away_diverges(self):
        with pytest.raises(DomainError):
            flight_path_length(inputs_for(3.0, 180.0))

    @pytest.mark.parametrize("gain", [3.0, 4.0, 5.0, 6.0])
    def test_tolerance_halving_stability(self, gain):
        inp = inputs_for(gain, 120.0)
        a = flight_path_length(inp, rel_tol=1e-10)
        b = flight_path_length(inp, rel_tol=5e-11)
        assert abs(a - b) <= 1e-8 * abs(a)

    def test_even_in_theta0(self):
        for gain, theta0 in ((3.0, 30.0), (3.0, 60.0), (2.0, 120.0), (3.0, 120.0)):
            plus = inputs_for(gain, theta0)
            minus = inputs_for(gain, -theta0)
            assert flight_path_length(plus) == flight_path_length(minus)
            assert curvature_increment(plus) == curvature_increment(minus)
            assert max_relative_distance(plus) == max_relative_distance(minus)
            if gain > 2.0:
                assert max_curvature(plus) == max_curvature(minus)


class TestTerminalImpactAngle:
    def test_head_on_keeps_los(self):
        inp = inputs_for(3.0, 0.0)
        assert terminal_impact_angle(inp) == pytest.approx(Q0, rel=1e-14)

    def test_reference_case_meets_reverse_los(self):
        q_f = terminal_impact_angle(inputs_for(3.0, 120.0))
        assert abs(wrap_angle(q_f - math.pi)) < 1e-12

    def test_gain_two_wraps(self):
        q_f = terminal_impact_angle(inputs_for(2.0, 120.0))
        assert q_f == pytest.approx(math.radians(120.0), abs=1e-12)


class TestFlightTime:
    def test_no_drag(self):
        assert flight_time_under_constant_drag(20000.0, SpeedProfile(500.0)) == 40.0

    def test_reference_drag_case(self):
        t = flight_time_under_constant_drag(33937.42, SpeedProfile(500.0, 0.1))
        assert t == pytest.approx(68.3419016, rel=1e-8)

    def test_zero_distance(self):
        assert flight_time_under_constant_drag(0.0, SpeedProfile(500.0, 0.1)) == 0.0

    def test_unreachable_distance(self):
        profile = SpeedProfile(10.0, 1.0)  # coast range 50 m
        with pytest.raises(InsufficientEnergyError):
            flight_time_under_constant_drag(51.0, profile)


class TestProfile:
    def test_speed_invariant_along_profile(self):
        points = profile(inputs_for(3.0, 120.0), samples=200)
        for p in points[:-1]:  # last point sits at r = 0
            defect = p.r_prime**2 + (p.r * p.q_prime) ** 2 - 1.0
            assert abs(defect) < 1e-12

    def test_endpoints_and_monotone_theta(self):
        inp = inputs_for(3.0, 120.0)
        points = profile(inp, samples=50)
        assert points[0].r == R0
        assert points[0].theta_m == inp.theta_m0
        assert points[-1].r == 0.0
        assert points[-1].theta_m == 0.0
        thetas = [p.theta_m for p in points]
        assert all(b < a for a, b in zip(thetas, thetas[1:]))

    def test_head_on_profile(self):
        points = profile(inputs_for(3.0, 0.0), samples=10)
        assert all(p.k_m == 0.0 and p.theta_m == 0.0 for p in points)
        assert points[0].r == R0 and points[-1].r == 0.0

    def test_sign_preserved(self):
        # sign(sin theta_m) matches sign(sin theta_m0) until intercept
        points = profile(inputs_for(3.0, -120.0), samples=100)
        assert all(math.sin(p.theta_m) < 0.0 for p in points[:-1])
