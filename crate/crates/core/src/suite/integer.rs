//! Exact polynomial arithmetic over `M_3(Z)`.

use num_bigint::BigInt;

pub type IntMatrix = [[BigInt; 3]; 3];

fn zero() -> IntMatrix {
    std::array::from_fn(|_| std::array::from_fn(|_| BigInt::from(0)))
}

fn unit(i: usize, j: usize) -> IntMatrix {
    let mut m = zero();
    m[i][j] = BigInt::from(1);
    m
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut c = zero();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                c[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    c
}

fn mat_add(a: &mut IntMatrix, b: &IntMatrix) {
    for i in 0..3 {
        for j in 0..3 {
            a[i][j] += &b[i][j];
        }
    }
}

fn is_zero(a: &IntMatrix) -> bool {
    a.iter().flatten().all(|x| *x == BigInt::from(0))
}

/// Product of matrix polynomials given by coefficient lists.
pub fn poly_mul(f: &[IntMatrix], g: &[IntMatrix]) -> Vec<IntMatrix> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            let p = mat_mul(a, b);
            mat_add(&mut out[i + j], &p);
        }
    }
    out
}

/// Degree of a coefficient list after dropping zero coefficients.
pub fn degree(p: &[IntMatrix]) -> Option<usize> {
    p.iter().rposition(|m| !is_zero(m))
}

/// `f` has `x^{3i+j}` in entry `(i, j)`; `g` has `x` in its first row and
/// `-1` in its second.
pub fn identity_pair() -> (Vec<IntMatrix>, Vec<IntMatrix>) {
    let f = (0..9).map(|k| unit(k / 3, k % 3)).collect();
    let mut g0 = zero();
    let mut g1 = zero();
    for j in 0..3 {
        g0[1][j] = BigInt::from(-1);
        g1[0][j] = BigInt::from(1);
    }
    (f, vec![g0, g1])
}

/// The same pair with entries reduced modulo `n`, row-major.
pub fn reduce_mod(p: &[IntMatrix], n: u64) -> Vec<[u64; 9]> {
    let n = BigInt::from(n);
    p.iter()
        .map(|m| {
            std::array::from_fn(|k| {
                let r = ((&m[k / 3][k % 3] % &n) + &n) % &n;
                u64::try_from(r).expect("residue fits")
            })
        })
        .collect()
}
