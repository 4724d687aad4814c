//! Small fixed-size vector/matrix helpers shared by the physics modules.
//!
//! States and characteristic quantities are 4-vectors; facet-frame operators
//! are 4×4; the viscous quasi-linear term couples to the 5-vector χ through
//! 4×5 blocks. Plain arrays keep these formulas close to their written form.

pub type Vec2 = [f64; 2];
pub type Vec4 = [f64; 4];
pub type Vec5 = [f64; 5];
pub type Mat2 = [[f64; 2]; 2];
pub type Mat4 = [[f64; 4]; 4];
pub type Mat45 = [[f64; 5]; 4];

pub const ZERO4: Vec4 = [0.0; 4];
pub const ZERO44: Mat4 = [[0.0; 4]; 4];

pub fn dot2(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

pub fn norm2(a: Vec2) -> f64 {
    dot2(a, a).sqrt()
}

pub fn dot4(a: Vec4, b: Vec4) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

pub fn add4(a: Vec4, b: Vec4) -> Vec4 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub fn sub4(a: Vec4, b: Vec4) -> Vec4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

pub fn scale4(s: f64, a: Vec4) -> Vec4 {
    [s * a[0], s * a[1], s * a[2], s * a[3]]
}

pub fn axpy4(s: f64, a: Vec4, b: Vec4) -> Vec4 {
    [
        s * a[0] + b[0],
        s * a[1] + b[1],
        s * a[2] + b[2],
        s * a[3] + b[3],
    ]
}

pub fn matvec4(m: &Mat4, v: Vec4) -> Vec4 {
    [
        dot4(m[0], v),
        dot4(m[1], v),
        dot4(m[2], v),
        dot4(m[3], v),
    ]
}

pub fn matvec45(m: &Mat45, v: Vec5) -> Vec4 {
    let row = |r: &[f64; 5]| r[0] * v[0] + r[1] * v[1] + r[2] * v[2] + r[3] * v[3] + r[4] * v[4];
    [row(&m[0]), row(&m[1]), row(&m[2]), row(&m[3])]
}

pub fn matmul4(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = ZERO44;
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik != 0.0 {
                for j in 0..4 {
                    out[i][j] += aik * b[k][j];
                }
            }
        }
    }
    out
}

pub fn matadd4(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = ZERO44;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

pub fn matsub4(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = ZERO44;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] - b[i][j];
        }
    }
    out
}

pub fn matscale4(s: f64, a: &Mat4) -> Mat4 {
    let mut out = *a;
    for row in out.iter_mut() {
        for v in row.iter_mut() {
            *v *= s;
        }
    }
    out
}

pub fn identity4() -> Mat4 {
    let mut m = ZERO44;
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

pub fn diag4(d: Vec4) -> Mat4 {
    let mut m = ZERO44;
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = d[i];
    }
    m
}

pub fn frobenius4(m: &Mat4) -> f64 {
    m.iter()
        .flat_map(|r| r.iter())
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt()
}

/// Maximum absolute entry of a 4×4 matrix.
pub fn max_abs4(m: &Mat4) -> f64 {
    m.iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
}
