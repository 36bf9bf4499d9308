#![allow(dead_code)]

use ga3::exp::Branch;
use ga3::multivector::{blade::*, Multivector};
use ga3::remap::{basis_remap, RemapTable};
use ga3::signature::Signature;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const A_PRIME: [f64; 8] = [4.0, 1.0, 3.0, -5.0, 10.0, 9.0, -9.0, -4.0];

pub fn a_second() -> Multivector {
    Multivector::new(Signature::Cl30, A_PRIME) / 17.0
}

/// Printed eight-figure tables for `A″`, blade order `1 … e123`.
pub mod printed {
    pub const SINH: [f64; 8] = [0.0806082, -0.0230640, 0.0787983, -0.1724390, 0.5504206, 0.4830460, -0.4666026, -0.2082492];
    pub const COSH: [f64; 8] = [0.6039792, -0.1111834, -0.0900922, 0.0825265, 0.1730832, 0.1354867, -0.1084358, -0.2939648];
    pub const TANH: [f64; 8] = [0.6231177, 0.3099294, 0.4271905, -0.5723737, 0.4466951, 0.4439088, -0.4997530, 0.0547345];
    pub const SINH_6: [f64; 8] = [0.0806569, -0.0229633, 0.0788338, -0.1724240, 0.5500202, 0.4827078, -0.4662941, -0.2076350];
    pub const COSH_6: [f64; 8] = [0.6040721, -0.1111303, -0.0900394, 0.0824681, 0.1730517, 0.1354672, -0.1084281, -0.2939312];
    pub const TANH_6: [f64; 8] = [0.7629316, 0.3616722, 0.5029447, -0.6765545, 0.5446755, 0.5387139, -0.6033886, -0.1176009];
    pub const TANH_40: [f64; 8] = [0.6231595, 0.3099902, 0.4272145, -0.5723697, 0.4464672, 0.4437168, -0.4995786, 0.0550762];
    pub const SIN: [f64; 8] = [0.4142215, 0.1561775, 0.2887099, -0.4312306, 0.6127064, 0.5664210, -0.5864014, -0.2430952];
    pub const COS: [f64; 8] = [1.3837580, 0.1075001, 0.0726490, -0.0516785, -0.2436586, -0.1984718, 0.1707105, 0.4152926];
    pub const TAN: [f64; 8] = [0.0520468, -0.0321336, 0.0568865, -0.1373908, 0.4876809, 0.4261388, -0.4091069, -0.1473168];
    pub const SIN_6: [f64; 8] = [0.4141938, 0.1560854, 0.2886852, -0.4312611, 0.6131181, 0.5667705, -0.5867229, -0.2437297];
    pub const COS_6: [f64; 8] = [1.3838520, 0.1075543, 0.0727025, -0.0517373, -0.2436926, -0.1984933, 0.1707199, 0.4153298];
    pub const TAN_6: [f64; 8] = [0.0958579, 0.0035747, 0.0832419, -0.1588803, 0.4184797, 0.3705885, -0.3625310, -0.0454115];
    pub const TAN_40: [f64; 8] = [0.0522097, -0.0320415, 0.0569781, -0.1374922, 0.4876273, 0.4261060, -0.4090946, -0.1472580];
}

pub fn max_abs_diff(a: &[f64; 8], b: &[f64; 8]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// `|a - b|_max / max(1, |b|_max)`.
pub fn rel_diff(a: &Multivector, b: &Multivector) -> f64 {
    a.max_diff(b) / b.max_abs().max(1.0)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mv<R: Rng>(rng: &mut R, sig: Signature, scale: f64) -> Multivector {
    let mut c = [0.0; 8];
    for v in c.iter_mut() {
        *v = rng.gen_range(-scale..=scale);
    }
    Multivector::new(sig, c)
}

/// Uniform coefficients in `[-1, 1]`, then divided by `max(1, ⌈Det^{1/4}⌉)`
/// whenever the determinant is positive.
pub fn random_normalized<R: Rng>(rng: &mut R, sig: Signature) -> Multivector {
    let x = random_mv(rng, sig, 1.0);
    match x.det_norm() {
        Ok(n) => x / n.ceil().max(1.0),
        Err(_) => x,
    }
}

const MASK: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

fn mask_index(m: u8) -> usize {
    MASK.iter().position(|&v| v == m).unwrap()
}

/// Geometric product from bitmask blade arithmetic; independent of the
/// crate's precomputed sign tables.
pub fn oracle_product(x: &Multivector, y: &Multivector) -> Multivector {
    let sq = x.sig.squares();
    let mut out = [0.0; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (a, b) = (MASK[i], MASK[j]);
            let mut swaps = 0;
            let mut s = a >> 1;
            while s != 0 {
                swaps += (s & b).count_ones();
                s >>= 1;
            }
            let mut sign = if swaps % 2 == 0 { 1.0 } else { -1.0 };
            for (k, q) in sq.iter().enumerate() {
                if a & b & (1 << k) != 0 {
                    sign *= f64::from(*q);
                }
            }
            out[mask_index(a ^ b)] += sign * x.c[i] * y.c[j];
        }
    }
    Multivector::new(x.sig, out)
}

/// `Σ_{k ≤ n} x^k / k!` with the oracle product.
pub fn oracle_exp(x: &Multivector, n: usize) -> Multivector {
    let mut total = Multivector::one(x.sig);
    let mut term = total;
    for k in 1..=n {
        term = oracle_product(&term, x) / k as f64;
        total = total + term;
    }
    total
}

/// Frozen 40-digit exponentials from `tests/data/frozen_exp.txt`.
pub fn frozen_exp() -> Vec<(Multivector, Multivector)> {
    include_str!("../data/frozen_exp.txt")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split(';').collect();
            let sig: Signature = f[0].parse().unwrap();
            let div: f64 = f[2].parse().unwrap();
            let parse8 = |s: &str| -> [f64; 8] {
                let v: Vec<f64> = s.split(',').map(|t| t.parse().unwrap()).collect();
                v.try_into().unwrap()
            };
            let x = Multivector::new(sig, parse8(f[1])) / div;
            (x, Multivector::new(sig, parse8(f[3])))
        })
        .collect()
}

/// Classical RK4 for `dψ/dt = ½ γ I B(t) ψ` from `t = 0` to `t_end`.
pub fn rk4_spinor(cfg: &ga3::spin::FieldConfig, psi0: Multivector, t_end: f64, dt: f64) -> Multivector {
    let i = Multivector::pseudoscalar(Signature::Cl30);
    let rhs = |t: f64, psi: Multivector| i * cfg.field(t) * psi * (0.5 * cfg.gamma);
    let steps = (t_end / dt).round() as usize;
    let h = t_end / steps as f64;
    let mut psi = psi0;
    for n in 0..steps {
        let t = n as f64 * h;
        let k1 = rhs(t, psi);
        let k2 = rhs(t + h / 2.0, psi + k1 * (h / 2.0));
        let k3 = rhs(t + h / 2.0, psi + k2 * (h / 2.0));
        let k4 = rhs(t + h, psi + k3 * h);
        psi = psi + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    psi
}

/// Random vector + bivector parts on the degenerate sets of each algebra.
pub fn degenerate_samples(sig: Signature, n: usize, seed: u64) -> Vec<(Multivector, Branch)> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for k in 0..n {
        let mut r = |s: f64| rng.gen_range(-s..s);
        let (a0, a123) = (r(0.5), r(0.5));
        let mut c = [a0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, a123];
        let branch = match sig {
            Signature::Cl03 => {
                // a₊ = 0 needs a3 = a12, a2 = -a13, a1 = a23; a₋ = 0 the opposite signs.
                let (p, q) = ([r(1.0), r(1.0), r(1.0)], [r(1.0), r(1.0), r(1.0)]);
                match k % 3 {
                    0 => {
                        c[E1] = p[0]; c[E23] = p[0]; c[E2] = p[1]; c[E13] = -p[1]; c[E3] = p[2]; c[E12] = p[2];
                        Branch::PlusDegenerate
                    }
                    1 => {
                        c[E1] = q[0]; c[E23] = -q[0]; c[E2] = q[1]; c[E13] = q[1]; c[E3] = q[2]; c[E12] = -q[2];
                        Branch::MinusDegenerate
                    }
                    _ => Branch::BothDegenerate,
                }
            }
            Signature::Cl30 | Signature::Cl12 => {
                // Nilpotent a + 𝒜 with 𝒜 = I v, v ⟂ a, |v| = |a| in Cl(3,0).
                let a = [r(1.0), r(1.0), r(1.0)];
                let t = [r(1.0), r(1.0), r(1.0)];
                let mut v = [a[1] * t[2] - a[2] * t[1], a[2] * t[0] - a[0] * t[2], a[0] * t[1] - a[1] * t[0]];
                let na = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
                let nv = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
                v.iter_mut().for_each(|x| *x *= na / nv);
                let mut m = [a0, a[0], a[1], a[2], v[2], -v[1], v[0], a123];
                if k % 4 == 0 {
                    m[1..7].iter_mut().for_each(|x| *x = 0.0);
                }
                c = m;
                Branch::BothDegenerate
            }
            Signature::Cl21 => {
                // p = (a1+a23, a2-a13, a3-a12), q = (a1-a23, a2+a13, a3+a12); a₊² = p1²+p2²-p3².
                let (p1, p2, q1, q2) = (r(1.0), r(1.0), r(1.0), r(1.0));
                let on_cone = |x: f64, y: f64, s: f64| s * x.hypot(y);
                let (p3, q3, branch) = match k % 3 {
                    0 => (on_cone(p1, p2, 1.0), r(0.3), Branch::PlusDegenerate),
                    1 => (r(0.3), on_cone(q1, q2, -1.0), Branch::MinusDegenerate),
                    _ => (on_cone(p1, p2, -1.0), on_cone(q1, q2, 1.0), Branch::BothDegenerate),
                };
                c[E1] = (p1 + q1) / 2.0;
                c[E23] = (p1 - q1) / 2.0;
                c[E2] = (p2 + q2) / 2.0;
                c[E13] = (q2 - p2) / 2.0;
                c[E3] = (p3 + q3) / 2.0;
                c[E12] = (q3 - p3) / 2.0;
                branch
            }
        };
        let mut x = Multivector::new(Signature::Cl30, c);
        if sig == Signature::Cl12 {
            x = basis_remap(&x, RemapTable::Cl30Cl12Swap).unwrap();
        } else {
            x = Multivector::new(sig, c);
        }
        out.push((x, branch));
    }
    out
}
