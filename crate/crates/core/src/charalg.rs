//! Characteristic algebra of the 2D Euler system on a facet frame, plus the
//! quasi-linear viscous machinery used by the characteristic boundary
//! operators.
//!
//! Everything is expressed in the local orthonormal frame (n, t) of a facet:
//! ξ denotes the coordinate along n, η the coordinate along t. The convective
//! Jacobian A = ∂(F·n)/∂U diagonalizes as A = PΛP⁻¹ with the fixed eigenvalue
//! ordering Λ = diag(u_n − c, u_n, u_n, u_n + c); all sign splittings, the
//! transverse matrix Θ = P⁻¹BP and the characteristic amplitudes ℒ = ΛP⁻¹∂ξU
//! index against this ordering.

use crate::linalg::{
    diag4, dot2, dot4, identity4, matmul4, matscale4, matsub4, matvec4, matvec45, Mat4, Mat45,
    Vec2, Vec4, Vec5, ZERO44,
};
use crate::thermo::{primitives, GasModel, MixedState, StateVector, ThermoError};

/// Local orthonormal facet frame: outward unit normal and the tangent
/// obtained by rotating n counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FacetFrame {
    pub n: Vec2,
    pub t: Vec2,
}

impl FacetFrame {
    /// Builds the frame from a (not necessarily unit) normal.
    pub fn from_normal(n: Vec2) -> Self {
        let len = dot2(n, n).sqrt();
        assert!(len > 0.0, "degenerate facet normal");
        let n = [n[0] / len, n[1] / len];
        FacetFrame {
            n,
            t: [-n[1], n[0]],
        }
    }

    /// Rotation matrix with columns (n, t); det = +1.
    pub fn rotation(&self) -> [[f64; 2]; 2] {
        [[self.n[0], self.t[0]], [self.n[1], self.t[1]]]
    }
}

/// Convective flux Jacobian ∂(F·r)/∂U for an arbitrary direction r (the
/// closed form is linear in r; r = n gives A, r = t gives B).
pub fn flux_jacobian_dir(
    u: &StateVector,
    r: Vec2,
    gas: &GasModel,
) -> Result<Mat4, ThermoError> {
    let pr = primitives(u, gas)?;
    let g = gas.gamma;
    let [ux, uy] = pr.u;
    let u2 = ux * ux + uy * uy;
    let ur = dot2(pr.u, r);
    let [rx, ry] = r;
    let h = pr.h;
    Ok([
        [0.0, rx, ry, 0.0],
        [
            (g - 1.0) / 2.0 * u2 * rx - ux * ur,
            ur - (g - 2.0) * ux * rx,
            ux * ry - (g - 1.0) * uy * rx,
            (g - 1.0) * rx,
        ],
        [
            (g - 1.0) / 2.0 * u2 * ry - uy * ur,
            uy * rx - (g - 1.0) * ux * ry,
            ur - (g - 2.0) * uy * ry,
            (g - 1.0) * ry,
        ],
        [
            ((g - 1.0) / 2.0 * u2 - h) * ur,
            h * rx - (g - 1.0) * ux * ur,
            h * ry - (g - 1.0) * uy * ur,
            g * ur,
        ],
    ])
}

/// A = ∂(F·n)/∂U.
pub fn jacobian_normal(
    u: &StateVector,
    frame: &FacetFrame,
    gas: &GasModel,
) -> Result<Mat4, ThermoError> {
    flux_jacobian_dir(u, frame.n, gas)
}

/// B = ∂(F·t)/∂U.
pub fn jacobian_tangent(
    u: &StateVector,
    frame: &FacetFrame,
    gas: &GasModel,
) -> Result<Mat4, ThermoError> {
    flux_jacobian_dir(u, frame.t, gas)
}

/// Eigensystem of A with the fixed ordering (u_n − c, u_n, u_n, u_n + c) and
/// all derived sign splittings.
#[derive(Clone, Debug)]
pub struct CharSystem {
    pub frame: FacetFrame,
    /// Normal velocity u·n at the state used to build the system.
    pub un: f64,
    /// Tangential velocity u·t.
    pub ut: f64,
    pub c: f64,
    pub rho: f64,
    pub lambda: Vec4,
    pub p: Mat4,
    pub pinv: Mat4,
    /// λ∓ = (λ ∓ |λ|)/2: negative/positive parts.
    pub lambda_minus: Vec4,
    pub lambda_plus: Vec4,
    pub a: Mat4,
    pub a_minus: Mat4,
    pub a_plus: Mat4,
    /// Iₙ = diag(sign λᵢ) with an exact 0 entry for λᵢ = 0.
    pub i_n: Vec4,
    /// Q∓ = P·(I ∓ Iₙ)/2·P⁻¹.
    pub q_minus: Mat4,
    pub q_plus: Mat4,
}

pub fn eigensystem(
    u: &StateVector,
    frame: &FacetFrame,
    gas: &GasModel,
) -> Result<CharSystem, ThermoError> {
    let pr = primitives(u, gas)?;
    let g = gas.gamma;
    let [ux, uy] = pr.u;
    let [nx, ny] = frame.n;
    let c = pr.c;
    let c2 = c * c;
    let rho = u.rho;
    let un = dot2(pr.u, frame.n);
    let ut = dot2(pr.u, frame.t);
    let u2 = ux * ux + uy * uy;

    let lambda = [un - c, un, un, un + c];

    let p = [
        [1.0 / (2.0 * c2), 1.0 / c2, 0.0, 1.0 / (2.0 * c2)],
        [
            -nx / (2.0 * c) + ux / (2.0 * c2),
            ux / c2,
            rho * ny,
            nx / (2.0 * c) + ux / (2.0 * c2),
        ],
        [
            -ny / (2.0 * c) + uy / (2.0 * c2),
            uy / c2,
            -rho * nx,
            ny / (2.0 * c) + uy / (2.0 * c2),
        ],
        [
            0.5 / (g - 1.0) - un / (2.0 * c) + u2 / (4.0 * c2),
            u2 / (2.0 * c2),
            rho * (ux * ny - uy * nx),
            0.5 / (g - 1.0) + un / (2.0 * c) + u2 / (4.0 * c2),
        ],
    ];
    let pinv = [
        [
            c * un + (g - 1.0) / 2.0 * u2,
            -c * nx + ux * (1.0 - g),
            -c * ny + uy * (1.0 - g),
            g - 1.0,
        ],
        [
            c2 - (g - 1.0) / 2.0 * u2,
            -ux * (1.0 - g),
            -uy * (1.0 - g),
            1.0 - g,
        ],
        [(-ux * ny + uy * nx) / rho, ny / rho, -nx / rho, 0.0],
        [
            -c * un + (g - 1.0) / 2.0 * u2,
            c * nx + ux * (1.0 - g),
            c * ny + uy * (1.0 - g),
            g - 1.0,
        ],
    ];

    let mut lambda_minus = [0.0; 4];
    let mut lambda_plus = [0.0; 4];
    let mut i_n = [0.0; 4];
    for i in 0..4 {
        let l = lambda[i];
        lambda_minus[i] = 0.5 * (l - l.abs());
        lambda_plus[i] = 0.5 * (l + l.abs());
        i_n[i] = if l > 0.0 {
            1.0
        } else if l < 0.0 {
            -1.0
        } else {
            0.0
        };
    }

    let similar = |d: Vec4| matmul4(&matmul4(&p, &diag4(d)), &pinv);
    let a = similar(lambda);
    let a_minus = similar(lambda_minus);
    let a_plus = similar(lambda_plus);
    let q_minus = similar([
        0.5 * (1.0 - i_n[0]),
        0.5 * (1.0 - i_n[1]),
        0.5 * (1.0 - i_n[2]),
        0.5 * (1.0 - i_n[3]),
    ]);
    let q_plus = similar([
        0.5 * (1.0 + i_n[0]),
        0.5 * (1.0 + i_n[1]),
        0.5 * (1.0 + i_n[2]),
        0.5 * (1.0 + i_n[3]),
    ]);

    Ok(CharSystem {
        frame: *frame,
        un,
        ut,
        c,
        rho,
        lambda,
        p,
        pinv,
        lambda_minus,
        lambda_plus,
        a,
        a_minus,
        a_plus,
        i_n,
        q_minus,
        q_plus,
    })
}

impl CharSystem {
    /// |A| = P·|Λ|·P⁻¹.
    pub fn a_abs(&self) -> Mat4 {
        matsub4(&self.a_plus, &self.a_minus)
    }

    /// P·D·P⁻¹ for a diagonal D given by its entries.
    pub fn similar_diag(&self, d: Vec4) -> Mat4 {
        matmul4(&matmul4(&self.p, &diag4(d)), &self.pinv)
    }

    /// Clamps the split eigenvalues away from zero (λ̃⁺ = max(λ⁺, ε),
    /// λ̃⁻ = min(λ⁻, −ε)) and rebuilds A∓. This is the iterative-solver
    /// workaround for vanishing eigenvalues; the sign diagonal and the Q
    /// projections are left exact.
    pub fn with_eigen_floor(mut self, eps: f64) -> Self {
        for i in 0..4 {
            self.lambda_plus[i] = self.lambda_plus[i].max(eps);
            self.lambda_minus[i] = self.lambda_minus[i].min(-eps);
        }
        self.a_plus = self.similar_diag(self.lambda_plus);
        self.a_minus = self.similar_diag(self.lambda_minus);
        self
    }
}

/// Characteristic variation δW = (δp − ρc δu·n, c²δρ − δp, −δu·t, δp + ρc δu·n)
/// of a conservative perturbation dU about U.
pub fn char_variation(
    u: &StateVector,
    frame: &FacetFrame,
    du: Vec4,
    gas: &GasModel,
) -> Result<Vec4, ThermoError> {
    let pr = primitives(u, gas)?;
    let rho = u.rho;
    let [ux, uy] = pr.u;
    let drho = du[0];
    let dvel = [
        (du[1] - ux * drho) / rho,
        (du[2] - uy * drho) / rho,
    ];
    let dp = (gas.gamma - 1.0)
        * (du[3] - ux * du[1] - uy * du[2] + 0.5 * (ux * ux + uy * uy) * drho);
    let c = pr.c;
    let dun = dot2(dvel, frame.n);
    let dut = dot2(dvel, frame.t);
    Ok([
        dp - rho * c * dun,
        c * c * drho - dp,
        -dut,
        dp + rho * c * dun,
    ])
}

/// Transverse coupling matrix Θ = P⁻¹BP in closed form.
pub fn theta_matrix(
    u: &StateVector,
    frame: &FacetFrame,
    gas: &GasModel,
) -> Result<Mat4, ThermoError> {
    let pr = primitives(u, gas)?;
    let ut = dot2(pr.u, frame.t);
    let rho = u.rho;
    let rc2 = rho * pr.c * pr.c;
    let h = -0.5 / rho;
    Ok([
        [ut, 0.0, -rc2, 0.0],
        [0.0, ut, 0.0, 0.0],
        [h, 0.0, ut, h],
        [0.0, 0.0, -rc2, ut],
    ])
}

/// Characteristic amplitudes ℒ = Λ·P⁻¹·∂U/∂ξ.
pub fn amplitudes(sys: &CharSystem, du_dxi: Vec4) -> Vec4 {
    let w = matvec4(&sys.pinv, du_dxi);
    [
        sys.lambda[0] * w[0],
        sys.lambda[1] * w[1],
        sys.lambda[2] * w[2],
        sys.lambda[3] * w[3],
    ]
}

/// Transverse contributions 𝒯 = Θ·P⁻¹·∂U/∂η.
pub fn transverse(
    u: &StateVector,
    frame: &FacetFrame,
    du_deta: Vec4,
    gas: &GasModel,
) -> Result<Vec4, ThermoError> {
    let sys = eigensystem(u, frame, gas)?;
    let theta = theta_matrix(u, frame, gas)?;
    Ok(matvec4(&theta, matvec4(&sys.pinv, du_deta)))
}

/// Splits a characteristic-space vector into incoming/outgoing parts by the
/// sign structure of Λ: component i goes to the minus side when λᵢ < 0, to
/// the plus side when λᵢ > 0, and is shared equally when λᵢ = 0.
fn split_by_sign(sys: &CharSystem, v: Vec4) -> (Vec4, Vec4) {
    let mut minus = [0.0; 4];
    let mut plus = [0.0; 4];
    for i in 0..4 {
        minus[i] = 0.5 * (1.0 - sys.i_n[i]) * v[i];
        plus[i] = 0.5 * (1.0 + sys.i_n[i]) * v[i];
    }
    (minus, plus)
}

/// (ℒ⁻, ℒ⁺): incoming/outgoing characteristic amplitudes.
pub fn split_amplitudes(sys: &CharSystem, l: Vec4) -> (Vec4, Vec4) {
    split_by_sign(sys, l)
}

/// (𝒯⁻, 𝒯⁺): transverse contributions split by the same sign structure.
pub fn split_transverse(sys: &CharSystem, t: Vec4) -> (Vec4, Vec4) {
    split_by_sign(sys, t)
}

/// Characteristic amplitudes, transverse and viscous contributions bundled.
#[derive(Clone, Copy, Debug, Default)]
pub struct CharTerms {
    pub l: Vec4,
    pub t: Vec4,
    pub v: Vec4,
}

/// Viscous flux Jacobians for a direction r: A_r^U = ∂(G·r·Re)/∂U (4×4) and
/// A_r^χ = ∂(G·r·Re)/∂χ (4×5). The 1/Re factor is applied by callers.
pub fn viscous_jacobians(
    u: &StateVector,
    mixed: &MixedState,
    r: Vec2,
    gas: &GasModel,
) -> Result<(Mat4, Mat45), ThermoError> {
    let pr = primitives(u, gas)?;
    let [ux, uy] = pr.u;
    let [rx, ry] = r;
    let er = mixed.eps_dot(r);
    let two_over_rho = 2.0 / u.rho;

    let mut a_u = ZERO44;
    a_u[3] = [
        -two_over_rho * dot2(er, pr.u),
        two_over_rho * er[0],
        two_over_rho * er[1],
        0.0,
    ];

    let a_chi: Mat45 = [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [2.0 * rx, 2.0 * ry, 0.0, 0.0, 0.0],
        [0.0, 2.0 * rx, 2.0 * ry, 0.0, 0.0],
        [
            2.0 * rx * ux,
            2.0 * (rx * uy + ry * ux),
            2.0 * ry * uy,
            rx / gas.prandtl,
            ry / gas.prandtl,
        ],
    ];
    Ok((a_u, a_chi))
}

/// Viscous contribution 𝒱 = (1/Re)[A_n^U ∂ξU + A_n^χ ∂ξχ + A_t^U ∂ηU + A_t^χ ∂ηχ].
/// For smooth fields this equals div(G) at the point.
#[allow(clippy::too_many_arguments)]
pub fn viscous_term(
    u: &StateVector,
    mixed: &MixedState,
    du_dxi: Vec4,
    dchi_dxi: Vec5,
    du_deta: Vec4,
    dchi_deta: Vec5,
    frame: &FacetFrame,
    gas: &GasModel,
) -> Result<Vec4, ThermoError> {
    let re = gas.reynolds.ok_or(ThermoError::InviscidMode)?;
    let (an_u, an_chi) = viscous_jacobians(u, mixed, frame.n, gas)?;
    let (at_u, at_chi) = viscous_jacobians(u, mixed, frame.t, gas)?;
    let mut v = [0.0; 4];
    let n_u = matvec4(&an_u, du_dxi);
    let n_c = matvec45(&an_chi, dchi_dxi);
    let t_u = matvec4(&at_u, du_deta);
    let t_c = matvec45(&at_chi, dchi_deta);
    for i in 0..4 {
        v[i] = (n_u[i] + n_c[i] + t_u[i] + t_c[i]) / re;
    }
    Ok(v)
}

/// Zero-normal-gradient viscous conditions, expressed as components of the
/// normal χ-derivative (in the rotated n/t frame) to drop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViscousCondition {
    /// ∂ξ(tᵀτn) = 0: drop ∂ξε_nt.
    DropNormalTangentialStress,
    /// Drop ∂ξε_nn.
    DropNormalNormalStress,
    /// Drop ∂ξε_tt.
    DropTangentialTangentialStress,
    /// ∂ξ(q·n) = 0: drop ∂ξφ_n.
    DropNormalHeatFlux,
}

/// Expresses the Cartesian χ-derivative in the rotated frame:
/// (∂ξε_nn, ∂ξε_nt, ∂ξε_tt, ∂ξφ_n, ∂ξφ_t).
pub fn rotate_chi_gradient(dchi_dxi: Vec5, frame: &FacetFrame) -> Vec5 {
    let [exx, exy, eyy, phx, phy] = dchi_dxi;
    let [nx, ny] = frame.n;
    let [tx, ty] = frame.t;
    // RᵀMR entries for the symmetric matrix M of strain derivatives.
    let mn = [exx * nx + exy * ny, exy * nx + eyy * ny];
    let mt = [exx * tx + exy * ty, exy * tx + eyy * ty];
    [
        nx * mn[0] + ny * mn[1],
        nx * mt[0] + ny * mt[1],
        tx * mt[0] + ty * mt[1],
        phx * nx + phy * ny,
        phx * tx + phy * ty,
    ]
}

/// Inverse of [`rotate_chi_gradient`]: rebuilds the Cartesian components from
/// the rotated ones via M = R M_nt Rᵀ.
pub fn unrotate_chi_gradient(rotated: Vec5, frame: &FacetFrame) -> Vec5 {
    let [enn, ent, ett, phn, pht] = rotated;
    let [nx, ny] = frame.n;
    let [tx, ty] = frame.t;
    [
        enn * nx * nx + 2.0 * ent * nx * tx + ett * tx * tx,
        enn * nx * ny + ent * (nx * ty + tx * ny) + ett * tx * ty,
        enn * ny * ny + 2.0 * ent * ny * ty + ett * ty * ty,
        phn * nx + pht * tx,
        phn * ny + pht * ty,
    ]
}

/// Rotates the normal χ-derivative into the (n, t) frame, zeroes the selected
/// components, and rotates back. Used to impose zero-normal-gradient viscous
/// conditions inside the boundary viscous term.
pub fn modify_chi_gradient(
    dchi_dxi: Vec5,
    frame: &FacetFrame,
    conditions: &[ViscousCondition],
) -> Vec5 {
    let mut rot = rotate_chi_gradient(dchi_dxi, frame);
    for cond in conditions {
        match cond {
            ViscousCondition::DropNormalNormalStress => rot[0] = 0.0,
            ViscousCondition::DropNormalTangentialStress => rot[1] = 0.0,
            ViscousCondition::DropTangentialTangentialStress => rot[2] = 0.0,
            ViscousCondition::DropNormalHeatFlux => rot[3] = 0.0,
        }
    }
    unrotate_chi_gradient(rot, frame)
}
