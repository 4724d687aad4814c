//! Nondimensional ideal-gas model and pointwise flux evaluation.
//!
//! All quantities are dimensionless. Two reference scalings are supported:
//!
//! - **Aerodynamic**: ρ∞ = 1, |u∞| = 1, p∞ = 1/(Ma∞²γ) — velocities are
//!   measured against the free-stream speed.
//! - **Acoustic**: ρ∞ = 1, c∞ = 1, p∞ = 1/γ, |u∞| = Ma∞ — velocities are
//!   measured against the free-stream speed of sound.
//!
//! The equation of state is γp = ρ(γ−1)θ, so c² = γp/ρ = (γ−1)θ.

use crate::linalg::{dot2, Vec2, Vec4, Vec5};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ThermoError {
    #[error("non-admissible state: rho = {rho:.6e}, p = {p:.6e}")]
    NonAdmissibleState { rho: f64, p: f64 },
    #[error("viscous flux requested while the gas model is inviscid")]
    InviscidMode,
}

/// Reference scaling for the nondimensional free stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scaling {
    /// ρ∞ = 1, |u∞| = 1, p∞ = 1/(Ma∞²γ).
    Aerodynamic,
    /// ρ∞ = 1, c∞ = 1, p∞ = 1/γ, |u∞| = Ma∞.
    Acoustic,
}

#[derive(Clone, Copy, Debug)]
pub struct GasModel {
    /// Heat-capacity ratio γ (> 1).
    pub gamma: f64,
    /// Prandtl number (> 0).
    pub prandtl: f64,
    /// Reynolds number; `None` disables the viscous fluxes and the mixed
    /// equations entirely (inviscid mode is a flag, not Re = ∞ arithmetic).
    pub reynolds: Option<f64>,
    /// Free-stream Mach number (≥ 0).
    pub mach_inf: f64,
    pub scaling: Scaling,
}

impl GasModel {
    /// Standard diatomic-gas constants γ = 1.4, Pr = 0.72, inviscid.
    pub fn air(mach_inf: f64, scaling: Scaling) -> Self {
        GasModel {
            gamma: 1.4,
            prandtl: 0.72,
            reynolds: None,
            mach_inf,
            scaling,
        }
    }

    pub fn with_reynolds(mut self, reynolds: f64) -> Self {
        self.reynolds = Some(reynolds);
        self
    }

    pub fn is_viscous(&self) -> bool {
        self.reynolds.is_some()
    }

    /// Free-stream density (1 in both scalings).
    pub fn rho_inf(&self) -> f64 {
        1.0
    }

    /// Free-stream speed |u∞|.
    pub fn speed_inf(&self) -> f64 {
        match self.scaling {
            Scaling::Aerodynamic => 1.0,
            Scaling::Acoustic => self.mach_inf,
        }
    }

    /// Free-stream pressure p∞.
    pub fn p_inf(&self) -> f64 {
        match self.scaling {
            Scaling::Aerodynamic => 1.0 / (self.mach_inf * self.mach_inf * self.gamma),
            Scaling::Acoustic => 1.0 / self.gamma,
        }
    }

    /// Free-stream speed of sound c∞.
    pub fn c_inf(&self) -> f64 {
        match self.scaling {
            Scaling::Aerodynamic => 1.0 / self.mach_inf,
            Scaling::Acoustic => 1.0,
        }
    }

    /// Free-stream temperature θ∞ from c∞² = (γ−1)θ∞.
    pub fn theta_inf(&self) -> f64 {
        let c = self.c_inf();
        c * c / (self.gamma - 1.0)
    }
}

/// Conservative state U = (ρ, ρu, ρE).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateVector {
    pub rho: f64,
    pub mom: Vec2,
    pub rho_e: f64,
}

impl StateVector {
    pub fn from_array(u: Vec4) -> Self {
        StateVector {
            rho: u[0],
            mom: [u[1], u[2]],
            rho_e: u[3],
        }
    }

    pub fn to_array(self) -> Vec4 {
        [self.rho, self.mom[0], self.mom[1], self.rho_e]
    }
}

/// Primitive quantities derived from a conservative state.
#[derive(Clone, Copy, Debug)]
pub struct Primitives {
    pub u: Vec2,
    pub p: f64,
    pub theta: f64,
    /// Speed of sound, c² = γp/ρ.
    pub c: f64,
    /// Specific total enthalpy, H = E + p/ρ.
    pub h: f64,
    /// Specific total energy, E = ρE/ρ.
    pub e: f64,
}

/// Mixed (gradient) unknowns: deviatoric rate of strain in Voigt storage and
/// the temperature gradient. χ is the concatenation (εxx, εxy, εyy, φx, φy).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MixedState {
    /// (εxx, εxy, εyy).
    pub eps: [f64; 3],
    /// φ = ∇θ.
    pub phi: Vec2,
}

impl MixedState {
    pub fn chi(&self) -> Vec5 {
        [self.eps[0], self.eps[1], self.eps[2], self.phi[0], self.phi[1]]
    }

    pub fn from_chi(chi: Vec5) -> Self {
        MixedState {
            eps: [chi[0], chi[1], chi[2]],
            phi: [chi[3], chi[4]],
        }
    }

    /// ε·r for a direction r, using the symmetric Voigt storage.
    pub fn eps_dot(&self, r: Vec2) -> Vec2 {
        [
            self.eps[0] * r[0] + self.eps[1] * r[1],
            self.eps[1] * r[0] + self.eps[2] * r[1],
        ]
    }
}

/// Pressure p(U) = (γ−1)(ρE − |ρu|²/(2ρ)).
pub fn pressure(u: &StateVector, gas: &GasModel) -> f64 {
    (gas.gamma - 1.0) * (u.rho_e - dot2(u.mom, u.mom) / (2.0 * u.rho))
}

pub fn primitives(u: &StateVector, gas: &GasModel) -> Result<Primitives, ThermoError> {
    let p = pressure(u, gas);
    if !(u.rho > 0.0) || !(p > 0.0) || !p.is_finite() {
        return Err(ThermoError::NonAdmissibleState { rho: u.rho, p });
    }
    let vel = [u.mom[0] / u.rho, u.mom[1] / u.rho];
    let e = u.rho_e / u.rho;
    let theta = gas.gamma * (e - 0.5 * dot2(vel, vel));
    let c = (gas.gamma * p / u.rho).sqrt();
    let h = e + p / u.rho;
    Ok(Primitives {
        u: vel,
        p,
        theta,
        c,
        h,
        e,
    })
}

pub fn conservative(rho: f64, u: Vec2, p: f64, gas: &GasModel) -> Result<StateVector, ThermoError> {
    if !(rho > 0.0) || !(p > 0.0) {
        return Err(ThermoError::NonAdmissibleState { rho, p });
    }
    Ok(StateVector {
        rho,
        mom: [rho * u[0], rho * u[1]],
        rho_e: p / (gas.gamma - 1.0) + 0.5 * rho * dot2(u, u),
    })
}

/// Convective flux F(U), rows (ρuᵀ; ρu⊗u + pI; ρHuᵀ), as 4 rows × 2 columns.
pub fn convective_flux(u: &StateVector, gas: &GasModel) -> Result<[[f64; 2]; 4], ThermoError> {
    let pr = primitives(u, gas)?;
    let [ux, uy] = pr.u;
    Ok([
        [u.mom[0], u.mom[1]],
        [u.mom[0] * ux + pr.p, u.mom[0] * uy],
        [u.mom[1] * ux, u.mom[1] * uy + pr.p],
        [u.rho * pr.h * ux, u.rho * pr.h * uy],
    ])
}

/// Viscous flux G(U, ε, φ) = (1/Re)(0; 2ε; (2εu + φ/Pr)ᵀ), 4 rows × 2 columns.
pub fn viscous_flux(
    u: &StateVector,
    mixed: &MixedState,
    gas: &GasModel,
) -> Result<[[f64; 2]; 4], ThermoError> {
    let re = gas.reynolds.ok_or(ThermoError::InviscidMode)?;
    let pr = primitives(u, gas)?;
    let inv_re = 1.0 / re;
    let ex = mixed.eps_dot([1.0, 0.0]);
    let ey = mixed.eps_dot([0.0, 1.0]);
    let energy = |col: Vec2, phi: f64| (2.0 * dot2(col, pr.u) + phi / gas.prandtl) * inv_re;
    Ok([
        [0.0, 0.0],
        [2.0 * ex[0] * inv_re, 2.0 * ey[0] * inv_re],
        [2.0 * ex[1] * inv_re, 2.0 * ey[1] * inv_re],
        [
            energy(ex, mixed.phi[0]),
            energy(ey, mixed.phi[1]),
        ],
    ])
}

/// Free-stream conservative state for a unit flow direction.
pub fn farfield_state(gas: &GasModel, direction: Vec2) -> StateVector {
    let speed = gas.speed_inf();
    let norm = dot2(direction, direction).sqrt();
    let dir = if norm > 0.0 {
        [direction[0] / norm, direction[1] / norm]
    } else {
        [1.0, 0.0]
    };
    conservative(
        gas.rho_inf(),
        [speed * dir[0], speed * dir[1]],
        gas.p_inf(),
        gas,
    )
    .expect("free-stream state is admissible by construction")
}

/// ∂p/∂U = (γ−1)(|u|²/2, −u_x, −u_y, 1).
pub fn pressure_jacobian(u: &StateVector, gas: &GasModel) -> Vec4 {
    let g1 = gas.gamma - 1.0;
    let vel = [u.mom[0] / u.rho, u.mom[1] / u.rho];
    [
        g1 * 0.5 * dot2(vel, vel),
        -g1 * vel[0],
        -g1 * vel[1],
        g1,
    ]
}

/// ∂u/∂U, rows for u_x and u_y.
pub fn velocity_jacobian(u: &StateVector) -> [Vec4; 2] {
    let inv_rho = 1.0 / u.rho;
    let vel = [u.mom[0] * inv_rho, u.mom[1] * inv_rho];
    [
        [-vel[0] * inv_rho, inv_rho, 0.0, 0.0],
        [-vel[1] * inv_rho, 0.0, inv_rho, 0.0],
    ]
}

/// ∂θ/∂U with θ = γ(ρE/ρ − |ρu|²/(2ρ²)).
pub fn temperature_jacobian(u: &StateVector, gas: &GasModel) -> Vec4 {
    let inv_rho = 1.0 / u.rho;
    let vel = [u.mom[0] * inv_rho, u.mom[1] * inv_rho];
    let e = u.rho_e * inv_rho;
    [
        gas.gamma * (dot2(vel, vel) - e) * inv_rho,
        -gas.gamma * vel[0] * inv_rho,
        -gas.gamma * vel[1] * inv_rho,
        gas.gamma * inv_rho,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gas() -> GasModel {
        GasModel::air(0.2, Scaling::Aerodynamic).with_reynolds(150.0)
    }

    pub(crate) fn random_state(rng: &mut ChaCha8Rng, gas: &GasModel) -> StateVector {
        let rho = rng.random_range(0.2..3.0);
        let p = rng.random_range(0.2..3.0);
        let c = (gas.gamma * p / rho).sqrt();
        // Speeds up to twice the sound speed so both subsonic and supersonic
        // regimes are exercised.
        let speed = rng.random_range(0.0..2.0 * c);
        let angle = rng.random_range(0.0..std::f64::consts::TAU);
        conservative(rho, [speed * angle.cos(), speed * angle.sin()], p, gas).unwrap()
    }

    #[test]
    fn rest_state_acoustic_reference() {
        let gas = GasModel::air(0.0, Scaling::Acoustic);
        let u = StateVector::from_array([1.0, 0.0, 0.0, (1.0 / 1.4) / 0.4]);
        let pr = primitives(&u, &gas).unwrap();
        assert_relative_eq!(pr.p, 1.0 / 1.4, max_relative = 1e-14);
        assert_relative_eq!(pr.c, 1.0, max_relative = 1e-14);
        assert_eq!(pr.u, [0.0, 0.0]);
        // θ = γE at rest; with E = 1/(γ(γ−1)) this is 1/(γ−1).
        assert_relative_eq!(pr.theta, 1.0 / 0.4, max_relative = 1e-14);
    }

    #[test]
    fn primitive_identities_random() {
        let gas = gas();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let u = random_state(&mut rng, &gas);
            let pr = primitives(&u, &gas).unwrap();
            assert_relative_eq!(pr.h, pr.e + pr.p / u.rho, max_relative = 1e-12);
            assert_relative_eq!(pr.c * pr.c, (gas.gamma - 1.0) * pr.theta, max_relative = 1e-12);
            assert_relative_eq!(pr.c * pr.c, gas.gamma * pr.p / u.rho, max_relative = 1e-12);
        }
    }

    #[test]
    fn conservative_round_trip() {
        let gas = gas();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let rho = rng.random_range(0.1..5.0);
            let p = rng.random_range(0.1..5.0);
            let vel = [rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)];
            let u = conservative(rho, vel, p, &gas).unwrap();
            let pr = primitives(&u, &gas).unwrap();
            assert_relative_eq!(pr.p, p, max_relative = 1e-13);
            assert_relative_eq!(pr.u[0], vel[0], max_relative = 1e-13, epsilon = 1e-15);
            assert_relative_eq!(pr.u[1], vel[1], max_relative = 1e-13, epsilon = 1e-15);
        }
    }

    #[test]
    fn conservative_reference_values() {
        let gas = GasModel::air(0.0, Scaling::Acoustic);
        let u = conservative(1.0, [0.0, 0.0], 1.0 / 1.4, &gas).unwrap();
        assert_eq!(u.rho, 1.0);
        assert_eq!(u.mom, [0.0, 0.0]);
        assert_relative_eq!(u.rho_e, (1.0 / 1.4) / 0.4, max_relative = 1e-15);

        let aero = GasModel::air(0.2, Scaling::Aerodynamic);
        assert_relative_eq!(aero.p_inf(), 1.0 / (0.04 * 1.4), max_relative = 1e-14);
    }

    #[test]
    fn flux_at_rest_is_pressure_only() {
        let gas = GasModel::air(0.0, Scaling::Acoustic);
        let u = conservative(1.2, [0.0, 0.0], 0.9, &gas).unwrap();
        let f = convective_flux(&u, &gas).unwrap();
        assert_eq!(f[0], [0.0, 0.0]);
        assert_eq!(f[3], [0.0, 0.0]);
        assert_relative_eq!(f[1][0], 0.9, max_relative = 1e-14);
        assert_eq!(f[1][1], 0.0);
        assert_eq!(f[2][0], 0.0);
        assert_relative_eq!(f[2][1], 0.9, max_relative = 1e-14);
    }

    #[test]
    fn viscous_flux_linear_in_gradients() {
        let gas = gas();
        let u = conservative(1.1, [0.3, -0.2], 0.8, &gas).unwrap();
        let m = MixedState {
            eps: [0.1, -0.05, 0.2],
            phi: [0.4, -0.3],
        };
        let m2 = MixedState {
            eps: [0.2, -0.1, 0.4],
            phi: [0.8, -0.6],
        };
        let g1 = viscous_flux(&u, &m, &gas).unwrap();
        let g2 = viscous_flux(&u, &m2, &gas).unwrap();
        for i in 0..4 {
            for j in 0..2 {
                assert_relative_eq!(g2[i][j], 2.0 * g1[i][j], max_relative = 1e-13);
            }
        }
        let zero = viscous_flux(&u, &MixedState::default(), &gas).unwrap();
        assert_eq!(zero, [[0.0; 2]; 4]);
    }

    #[test]
    fn viscous_flux_requires_reynolds() {
        let gas = GasModel::air(0.2, Scaling::Aerodynamic);
        let u = conservative(1.0, [0.1, 0.0], 1.0, &gas).unwrap();
        assert_eq!(
            viscous_flux(&u, &MixedState::default(), &gas),
            Err(ThermoError::InviscidMode)
        );
    }

    #[test]
    fn farfield_states_match_scalings() {
        let ac = GasModel::air(0.03, Scaling::Acoustic);
        let u = farfield_state(&ac, [1.0, 0.0]);
        let pr = primitives(&u, &ac).unwrap();
        assert_relative_eq!(u.rho, 1.0);
        assert_relative_eq!(pr.u[0], 0.03, max_relative = 1e-14);
        assert_relative_eq!(pr.p, 1.0 / 1.4, max_relative = 1e-14);
        assert_relative_eq!(pr.c, 1.0, max_relative = 1e-14);

        let aero = GasModel::air(0.2, Scaling::Aerodynamic);
        let u = farfield_state(&aero, [1.0, 0.0]);
        let pr = primitives(&u, &aero).unwrap();
        assert_relative_eq!(norm(pr.u), 1.0, max_relative = 1e-14);
        assert_relative_eq!(pr.p, 1.0 / (0.04 * 1.4), max_relative = 1e-14);

        let rest = GasModel::air(0.0, Scaling::Acoustic);
        let u = farfield_state(&rest, [0.0, 0.0]);
        let pr = primitives(&u, &rest).unwrap();
        assert_eq!(pr.u, [0.0, 0.0]);
        assert_relative_eq!(pr.c, 1.0, max_relative = 1e-14);
    }

    fn norm(v: Vec2) -> f64 {
        dot2(v, v).sqrt()
    }

    #[test]
    fn non_admissible_states_are_rejected() {
        let gas = gas();
        let err = primitives(&StateVector::from_array([1.0, 3.0, 0.0, 1.0]), &gas);
        assert!(matches!(err, Err(ThermoError::NonAdmissibleState { .. })));
        let err = primitives(&StateVector::from_array([-1.0, 0.0, 0.0, 1.0]), &gas);
        assert!(matches!(err, Err(ThermoError::NonAdmissibleState { .. })));
    }

    #[test]
    fn primitive_jacobians_match_finite_differences() {
        let gas = gas();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let u0 = random_state(&mut rng, &gas);
            let base = u0.to_array();
            let dp = pressure_jacobian(&u0, &gas);
            let du = velocity_jacobian(&u0);
            let dth = temperature_jacobian(&u0, &gas);
            for k in 0..4 {
                let h = 1e-6 * base[k].abs().max(1.0);
                let mut up = base;
                up[k] += h;
                let mut dn = base;
                dn[k] -= h;
                let sp = StateVector::from_array(up);
                let sn = StateVector::from_array(dn);
                let pp = primitives(&sp, &gas).unwrap();
                let pn = primitives(&sn, &gas).unwrap();
                assert_relative_eq!(dp[k], (pp.p - pn.p) / (2.0 * h), max_relative = 2e-6, epsilon = 1e-9);
                assert_relative_eq!(du[0][k], (pp.u[0] - pn.u[0]) / (2.0 * h), max_relative = 2e-6, epsilon = 1e-9);
                assert_relative_eq!(du[1][k], (pp.u[1] - pn.u[1]) / (2.0 * h), max_relative = 2e-6, epsilon = 1e-9);
                assert_relative_eq!(dth[k], (pp.theta - pn.theta) / (2.0 * h), max_relative = 2e-6, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn convective_flux_rotational_covariance() {
        // F(RU)·(Rn) = R-block applied to F(U)·n for planar rotations acting
        // on the velocity components.
        let gas = gas();
        let mut rng = ChaCha8Rng::seed_from_u64(20260824);
        for _ in 0..200 {
            let u = random_state(&mut rng, &gas);
            let ang = rng.random_range(0.0..std::f64::consts::TAU);
            let (s, c) = ang.sin_cos();
            let rot = |v: Vec2| [c * v[0] - s * v[1], s * v[0] + c * v[1]];
            let n_ang = rng.random_range(0.0..std::f64::consts::TAU);
            let n = [n_ang.cos(), n_ang.sin()];

            let pr = primitives(&u, &gas).unwrap();
            let u_rot = conservative(u.rho, rot(pr.u), pr.p, &gas).unwrap();

            let f = convective_flux(&u, &gas).unwrap();
            let f_rot = convective_flux(&u_rot, &gas).unwrap();
            let rn = rot(n);
            let fn_base: Vec<f64> = (0..4).map(|i| f[i][0] * n[0] + f[i][1] * n[1]).collect();
            let fn_rot: Vec<f64> = (0..4).map(|i| f_rot[i][0] * rn[0] + f_rot[i][1] * rn[1]).collect();

            let mom_rot = rot([fn_base[1], fn_base[2]]);
            assert_relative_eq!(fn_rot[0], fn_base[0], max_relative = 1e-12, epsilon = 1e-13);
            assert_relative_eq!(fn_rot[1], mom_rot[0], max_relative = 1e-12, epsilon = 1e-13);
            assert_relative_eq!(fn_rot[2], mom_rot[1], max_relative = 1e-12, epsilon = 1e-13);
            assert_relative_eq!(fn_rot[3], fn_base[3], max_relative = 1e-12, epsilon = 1e-13);
        }
    }
}
