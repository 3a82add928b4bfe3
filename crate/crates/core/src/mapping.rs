//! Mapping functions `g(ω)` applied to WENO-JS weights, renormalization of
//! the mapped weights, and the order-preserving (OP) checks.
//!
//! The s-dependent mappings (M, PM, IM, MIP-ACMk) pull each weight toward its
//! own ideal weight `d_s`. MOP-ACMk applies one nondecreasing step function to
//! every weight, with plateaus at the ascending-sorted ideal weights, so it can
//! never swap the rank order of a weight triple.

use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{Triple, IDEAL_WEIGHTS};

/// Equality band for weight comparisons in the non-OP predicates.
pub const NONOP_TOLERANCE: f64 = 1e-12;

/// Ideal weights in ascending order plus the midpoints between neighbours,
/// which bound the MOP plateaus.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedIdealWeights {
    pub sorted: Vec<f64>,
    pub midpoints: Vec<f64>,
}

impl SortedIdealWeights {
    pub fn from_ideal(ideal: &[f64]) -> Self {
        let mut sorted = ideal.to_vec();
        sorted.sort_by(f64::total_cmp);
        let midpoints = sorted.windows(2).map(|p| 0.5 * (p[0] + p[1])).collect();
        SortedIdealWeights { sorted, midpoints }
    }
}

/// Plateau values of the fifth-order MOP mapping.
pub const MOP_PLATEAUS: [f64; 3] = [0.1, 0.3, 0.6];
/// Plateau boundaries `(d̃0+d̃1)/2` and `(d̃1+d̃2)/2`.
pub const MOP_MIDPOINTS: [f64; 2] = [0.2, 0.45];

/// One weight-mapping scheme with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MappingSpec {
    /// Identity: plain WENO-JS.
    Js,
    M,
    Pm { k: u32 },
    Im { k: u32, a: f64 },
    /// Per-substencil thresholds `cfs[s]` and edge slopes `slope[s]`.
    Mip { cfs: [f64; 3], slope: [f64; 3] },
    Mop { cfs0: f64, cfs1: f64, k0: f64, k1: f64 },
}

impl MappingSpec {
    pub fn pm(k: u32) -> Result<Self> {
        if k < 2 || k % 2 != 0 {
            return Err(Error::config("k", format!("PM requires an even k >= 2, got {k}")));
        }
        Ok(MappingSpec::Pm { k })
    }

    pub fn pm6() -> Self {
        MappingSpec::Pm { k: 6 }
    }

    pub fn im(k: u32, a: f64) -> Result<Self> {
        if k == 0 || k % 2 != 0 {
            return Err(Error::config("k", format!("IM requires a positive even k, got {k}")));
        }
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::config("A", format!("IM requires A > 0, got {a}")));
        }
        Ok(MappingSpec::Im { k, a })
    }

    pub fn im_default() -> Self {
        MappingSpec::Im { k: 2, a: 0.1 }
    }

    /// MIP-ACMk with `CFS_s = ratio · d_s` and the same slope on every substencil.
    pub fn mip(cfs_ratio: f64, slope: f64) -> Result<Self> {
        let cfs = IDEAL_WEIGHTS.map(|d| cfs_ratio * d);
        Self::mip_with(cfs, [slope; 3])
    }

    pub fn mip_with(cfs: [f64; 3], slope: [f64; 3]) -> Result<Self> {
        for s in 0..3 {
            let d = IDEAL_WEIGHTS[s];
            if !(cfs[s] > 0.0 && cfs[s] < d) {
                return Err(Error::config(
                    "cfs_ratio",
                    format!("CFS_{s} = {} must lie in (0, {d})", cfs[s]),
                ));
            }
            let max = d / cfs[s];
            if !(slope[s] >= 0.0 && slope[s] <= max * (1.0 + 1e-12)) {
                return Err(Error::config(
                    "ks",
                    format!("k_{s} = {} must lie in [0, {max}]", slope[s]),
                ));
            }
        }
        Ok(MappingSpec::Mip { cfs, slope })
    }

    pub fn mip_default() -> Self {
        Self::mip(0.1, 0.0).expect("default MIP parameters are in range")
    }

    pub fn mop(cfs0: f64, cfs1: f64, k0: f64, k1: f64) -> Result<Self> {
        let lo = MOP_PLATEAUS[0];
        let hi = MOP_PLATEAUS[2];
        if !(cfs0 > 0.0 && cfs0 <= lo) {
            return Err(Error::config("cfs0", format!("CFS0 = {cfs0} must lie in (0, {lo}]")));
        }
        if !(cfs1 >= hi && cfs1 < 1.0) {
            return Err(Error::config("cfs1", format!("CFS1 = {cfs1} must lie in [{hi}, 1)")));
        }
        let k0_max = lo / cfs0;
        if !(k0 >= 0.0 && k0 <= k0_max * (1.0 + 1e-12)) {
            return Err(Error::config("k0", format!("k0 = {k0} must lie in [0, {k0_max}]")));
        }
        let k1_max = (1.0 - hi) / (1.0 - cfs1);
        if !(k1 >= 0.0 && k1 <= k1_max * (1.0 + 1e-12)) {
            return Err(Error::config("k1", format!("k1 = {k1} must lie in [0, {k1_max}]")));
        }
        Ok(MappingSpec::Mop { cfs0, cfs1, k0, k1 })
    }

    pub fn mop_default() -> Self {
        MappingSpec::Mop {
            cfs0: 0.01,
            cfs1: 0.94,
            k0: 0.0,
            k1: 0.0,
        }
    }

    /// JS, M, PM6, IM(2, 0.1), MIP-ACMk and MOP-ACMk with their default parameters.
    pub fn all_schemes() -> [MappingSpec; 6] {
        [
            MappingSpec::Js,
            MappingSpec::M,
            Self::pm6(),
            Self::im_default(),
            Self::mip_default(),
            Self::mop_default(),
        ]
    }

    /// Short identifier used in configuration files and CSV output.
    pub fn name(&self) -> &'static str {
        match self {
            MappingSpec::Js => "js",
            MappingSpec::M => "m",
            MappingSpec::Pm { .. } => "pm",
            MappingSpec::Im { .. } => "im",
            MappingSpec::Mip { .. } => "mip-acmk",
            MappingSpec::Mop { .. } => "mop-acmk",
        }
    }

    /// True when one nondecreasing function is applied to every substencil.
    pub fn is_single_function(&self) -> bool {
        matches!(self, MappingSpec::Js | MappingSpec::Mop { .. })
    }

    /// `g_s(ω)`.
    #[inline]
    pub fn map(&self, s: usize, omega: f64) -> f64 {
        let d = IDEAL_WEIGHTS[s];
        match *self {
            MappingSpec::Js => omega,
            MappingSpec::M => map_m(omega, d),
            MappingSpec::Pm { k } => map_pm(omega, d, k),
            MappingSpec::Im { k, a } => map_im(omega, d, k, a),
            MappingSpec::Mip { cfs, slope } => map_mip_acmk(omega, d, cfs[s], slope[s]),
            MappingSpec::Mop { cfs0, cfs1, k0, k1 } => map_mop_acmk(omega, cfs0, cfs1, k0, k1),
        }
    }
}

impl fmt::Display for MappingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingSpec::Js => write!(f, "WENO-JS"),
            MappingSpec::M => write!(f, "WENO-M"),
            MappingSpec::Pm { k } => write!(f, "WENO-PM{k}"),
            MappingSpec::Im { k, a } => write!(f, "WENO-IM({k},{a})"),
            MappingSpec::Mip { .. } => write!(f, "MIP-WENO-ACMk"),
            MappingSpec::Mop { .. } => write!(f, "MOP-WENO-ACMk"),
        }
    }
}

#[inline]
pub fn map_m(omega: f64, d: f64) -> f64 {
    omega * (d + d * d - 3.0 * d * omega + omega * omega) / (d * d + (1.0 - 2.0 * d) * omega)
}

#[inline]
pub fn map_pm(omega: f64, d: f64, k: u32) -> f64 {
    let kp1 = (k + 1) as f64;
    let (c1, c2) = if omega <= d {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        (sign * kp1 / d.powi(k as i32 + 1), d / kp1)
    } else {
        (-kp1 / (1.0 - d).powi(k as i32 + 1), (d - (k as f64 + 2.0)) / kp1)
    };
    c1 * (omega - d).powi(k as i32 + 1) * (omega + c2) + d
}

/// At `ω ∈ {0, 1}` the `ω(1-ω)` term vanishes but `(ω-d)^k A > 0`, so the
/// formula reduces to `d + (ω-d)`; the clamp removes the rounding residue
/// that would otherwise leave `g(0)` a few ulps below zero.
#[inline]
pub fn map_im(omega: f64, d: f64, k: u32, a: f64) -> f64 {
    let e = omega - d;
    let ek = e.powi(k as i32);
    (d + ek * e * a / (ek * a + omega * (1.0 - omega))).max(0.0)
}

/// Upper threshold `CFS̄_s = 1 - (1-d_s)/d_s · CFS_s`.
#[inline]
pub fn mip_upper_threshold(d: f64, cfs: f64) -> f64 {
    1.0 - (1.0 - d) / d * cfs
}

#[inline]
pub fn map_mip_acmk(omega: f64, d: f64, cfs: f64, slope: f64) -> f64 {
    if omega < cfs {
        slope * omega
    } else if omega <= mip_upper_threshold(d, cfs) {
        d
    } else {
        1.0 - slope * (1.0 - omega)
    }
}

/// The s-independent order-preserving step mapping, fifth-order form:
/// `[0, CFS0) ↦ k0·ω`, `[CFS0, 0.2) ↦ 0.1`, `[0.2, 0.45) ↦ 0.3`,
/// `[0.45, CFS1] ↦ 0.6`, `(CFS1, 1] ↦ 1 - k1(1-ω)`.
#[inline]
pub fn map_mop_acmk(omega: f64, cfs0: f64, cfs1: f64, k0: f64, k1: f64) -> f64 {
    if omega < cfs0 {
        k0 * omega
    } else if omega < MOP_MIDPOINTS[0] {
        MOP_PLATEAUS[0]
    } else if omega < MOP_MIDPOINTS[1] {
        MOP_PLATEAUS[1]
    } else if omega <= cfs1 {
        MOP_PLATEAUS[2]
    } else {
        1.0 - k1 * (1.0 - omega)
    }
}

/// A mapping `g_s(ω)` as a type, so hot loops can be specialized per scheme.
pub trait WeightMap: Copy {
    fn g(&self, s: usize, omega: f64) -> f64;

    /// True when `g` is the identity and renormalization is skipped.
    fn is_identity(&self) -> bool {
        false
    }
}

impl WeightMap for MappingSpec {
    #[inline]
    fn g(&self, s: usize, omega: f64) -> f64 {
        self.map(s, omega)
    }
    #[inline]
    fn is_identity(&self) -> bool {
        matches!(self, MappingSpec::Js)
    }
}

pub mod maps {
    //! One zero-cost type per mapping family.
    use super::*;

    #[derive(Debug, Clone, Copy)]
    pub struct Identity;
    #[derive(Debug, Clone, Copy)]
    pub struct M;
    #[derive(Debug, Clone, Copy)]
    pub struct Pm(pub u32);
    #[derive(Debug, Clone, Copy)]
    pub struct Im(pub u32, pub f64);
    #[derive(Debug, Clone, Copy)]
    pub struct Mip(pub [f64; 3], pub [f64; 3]);
    #[derive(Debug, Clone, Copy)]
    pub struct Mop(pub f64, pub f64, pub f64, pub f64);

    impl WeightMap for Identity {
        #[inline(always)]
        fn g(&self, _: usize, omega: f64) -> f64 {
            omega
        }
        #[inline(always)]
        fn is_identity(&self) -> bool {
            true
        }
    }
    impl WeightMap for M {
        #[inline(always)]
        fn g(&self, s: usize, omega: f64) -> f64 {
            map_m(omega, IDEAL_WEIGHTS[s])
        }
    }
    impl WeightMap for Pm {
        #[inline(always)]
        fn g(&self, s: usize, omega: f64) -> f64 {
            map_pm(omega, IDEAL_WEIGHTS[s], self.0)
        }
    }
    impl WeightMap for Im {
        #[inline(always)]
        fn g(&self, s: usize, omega: f64) -> f64 {
            map_im(omega, IDEAL_WEIGHTS[s], self.0, self.1)
        }
    }
    impl WeightMap for Mip {
        #[inline(always)]
        fn g(&self, s: usize, omega: f64) -> f64 {
            map_mip_acmk(omega, IDEAL_WEIGHTS[s], self.0[s], self.1[s])
        }
    }
    impl WeightMap for Mop {
        #[inline(always)]
        fn g(&self, _: usize, omega: f64) -> f64 {
            map_mop_acmk(omega, self.0, self.1, self.2, self.3)
        }
    }
}

/// Receives the specialized mapping type chosen by [`MappingSpec::dispatch`].
pub trait MapVisitor {
    type Output;
    fn visit<W: WeightMap>(self, map: W) -> Self::Output;
}

impl MappingSpec {
    /// Calls `visitor` with the concrete mapping type of this spec.
    pub fn dispatch<V: MapVisitor>(&self, visitor: V) -> V::Output {
        match *self {
            MappingSpec::Js => visitor.visit(maps::Identity),
            MappingSpec::M => visitor.visit(maps::M),
            MappingSpec::Pm { k } => visitor.visit(maps::Pm(k)),
            MappingSpec::Im { k, a } => visitor.visit(maps::Im(k, a)),
            MappingSpec::Mip { cfs, slope } => visitor.visit(maps::Mip(cfs, slope)),
            MappingSpec::Mop { cfs0, cfs1, k0, k1 } => visitor.visit(maps::Mop(cfs0, cfs1, k0, k1)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappedWeights {
    /// `g_s(ω_s)` before renormalization.
    pub alpha: Triple,
    pub omega: Triple,
    /// True when `Σα = 0` and the input weights were passed through.
    pub fallback: bool,
}

#[inline]
pub fn apply_mapping<W: WeightMap>(omega: &Triple, map: &W) -> MappedWeights {
    if map.is_identity() {
        return MappedWeights {
            alpha: *omega,
            omega: *omega,
            fallback: false,
        };
    }
    let alpha = [map.g(0, omega[0]), map.g(1, omega[1]), map.g(2, omega[2])];
    let sum = alpha[0] + alpha[1] + alpha[2];
    if sum > 0.0 {
        let r = 1.0 / sum;
        MappedWeights {
            alpha,
            omega: [alpha[0] * r, alpha[1] * r, alpha[2] * r],
            fallback: false,
        }
    } else {
        MappedWeights {
            alpha,
            omega: *omega,
            fallback: true,
        }
    }
}

/// Returns the first substencil pair `(m, n)` whose mapping changes the rank
/// order of the weights, or `None` for an OP mapping process.
///
/// A pair violates when `ω_m ≠ ω_n` (beyond `tol`) and
/// `(ω_m - ω_n)(g_m - g_n) < -tol²`, or when `ω_m = ω_n` (within `tol`) and the
/// images differ by more than `tol`. Ordered inputs sharing one plateau value
/// are not counted.
pub fn is_nonop_instance(omega: &Triple, mapped: &Triple, tol: f64) -> Option<(usize, usize)> {
    for m in 0..3 {
        for n in m + 1..3 {
            let dw = omega[m] - omega[n];
            let dg = mapped[m] - mapped[n];
            let violates = if dw.abs() > tol {
                dw * dg < -tol * tol
            } else {
                dg.abs() > tol
            };
            if violates {
                return Some((m, n));
            }
        }
    }
    None
}

/// A sampled counterexample to the OP property: `ω_a ≥ ω_b` but
/// `g_m(ω_a) < g_n(ω_b)`, or `ω_a = ω_b` with unequal images.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpWitness {
    pub omega_a: f64,
    pub omega_b: f64,
    pub m: usize,
    pub n: usize,
    pub g_a: f64,
    pub g_b: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OpVerdict {
    pub sample_count: usize,
    /// Total number of violating `(ω_a, ω_b, m, n)` samples.
    pub violations: usize,
    /// The first violations found, in sampling order.
    pub witnesses: Vec<OpWitness>,
}

impl OpVerdict {
    pub fn is_op(&self) -> bool {
        self.violations == 0
    }
}

const MAX_WITNESSES: usize = 16;

/// Sampling-based OP certificate on the uniform grid `ω_i = i/(n-1)`.
pub fn classify_op_set(spec: &MappingSpec, sample_count: usize) -> Result<OpVerdict> {
    if sample_count < 100 {
        return Err(Error::config(
            "samples",
            format!("need at least 100 samples, got {sample_count}"),
        ));
    }
    let grid: Vec<f64> = (0..sample_count)
        .map(|i| i as f64 / (sample_count - 1) as f64)
        .collect();
    let table: Vec<Vec<f64>> = (0..3)
        .map(|s| grid.iter().map(|&w| spec.map(s, w)).collect())
        .collect();
    let tol = NONOP_TOLERANCE;
    let mut verdict = OpVerdict {
        sample_count,
        violations: 0,
        witnesses: Vec::new(),
    };
    for a in 0..sample_count {
        for b in 0..=a {
            for m in 0..3 {
                for n in 0..3 {
                    let (ga, gb) = (table[m][a], table[n][b]);
                    let bad = if a == b {
                        (ga - gb).abs() > tol
                    } else {
                        ga < gb - tol
                    };
                    if bad {
                        verdict.violations += 1;
                        if verdict.witnesses.len() < MAX_WITNESSES {
                            verdict.witnesses.push(OpWitness {
                                omega_a: grid[a],
                                omega_b: grid[b],
                                m,
                                n,
                                g_a: ga,
                                g_b: gb,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    /// Exact rational evaluation of g^M for the oracle checks.
    fn map_m_rational(w: (i64, i64), d: (i64, i64)) -> f64 {
        use num_rational_lite::Q;
        let w = Q::new(w.0, w.1);
        let d = Q::new(d.0, d.1);
        let num = w * (d + d * d - Q::int(3) * d * w + w * w);
        let den = d * d + (Q::int(1) - Q::int(2) * d) * w;
        (num / den).to_f64()
    }

    /// Tiny i128 rational used only by the oracles above.
    mod num_rational_lite {
        #[derive(Clone, Copy)]
        pub struct Q(i128, i128);
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        impl Q {
            pub fn new(n: i64, d: i64) -> Q {
                Q(n as i128, d as i128).reduce()
            }
            pub fn int(n: i64) -> Q {
                Q(n as i128, 1)
            }
            fn reduce(self) -> Q {
                let g = gcd(self.0, self.1).max(1);
                let s = if self.1 < 0 { -1 } else { 1 };
                Q(s * self.0 / g, s * self.1 / g)
            }
            pub fn to_f64(self) -> f64 {
                self.0 as f64 / self.1 as f64
            }
        }
        impl std::ops::Add for Q {
            type Output = Q;
            fn add(self, o: Q) -> Q {
                Q(self.0 * o.1 + o.0 * self.1, self.1 * o.1).reduce()
            }
        }
        impl std::ops::Sub for Q {
            type Output = Q;
            fn sub(self, o: Q) -> Q {
                Q(self.0 * o.1 - o.0 * self.1, self.1 * o.1).reduce()
            }
        }
        impl std::ops::Mul for Q {
            type Output = Q;
            fn mul(self, o: Q) -> Q {
                Q(self.0 * o.0, self.1 * o.1).reduce()
            }
        }
        impl std::ops::Div for Q {
            type Output = Q;
            fn div(self, o: Q) -> Q {
                Q(self.0 * o.1, self.1 * o.0).reduce()
            }
        }
    }

    #[test]
    fn sorted_ideal_weights() {
        let s = SortedIdealWeights::from_ideal(&IDEAL_WEIGHTS);
        assert_eq!(s.sorted, vec![0.1, 0.3, 0.6]);
        assert!(close(s.midpoints[0], MOP_MIDPOINTS[0], 1e-15));
        assert!(close(s.midpoints[1], MOP_MIDPOINTS[1], 1e-15));
    }

    #[test]
    fn m_anchors_and_value() {
        for d in IDEAL_WEIGHTS {
            assert!(close(map_m(d, d), d, 1e-15));
            assert_eq!(map_m(0.0, d), 0.0);
            assert!(close(map_m(1.0, d), 1.0, 1e-15));
        }
        let v = map_m(0.5, 0.1);
        assert!(close(v, 0.105 / 0.41, 1e-15));
        assert!(close(v, map_m_rational((1, 2), (1, 10)), 1e-15));
        assert!(close(v, 0.256_097_6, 1e-7));
    }

    #[test]
    fn pm_anchors_and_value() {
        for d in IDEAL_WEIGHTS {
            assert!(close(map_pm(0.0, d, 6), 0.0, 1e-15));
            assert_eq!(map_pm(d, d, 6), d);
            assert!(close(map_pm(1.0, d, 6), 1.0, 1e-14));
        }
        assert!(close(map_pm(0.05, 0.1, 6), 0.096_484_4, 1e-7));
        // flat ends
        for d in IDEAL_WEIGHTS {
            let h = 1e-7;
            assert!(((map_pm(h, d, 6) - map_pm(0.0, d, 6)) / h).abs() < 1e-3);
            assert!(((map_pm(1.0, d, 6) - map_pm(1.0 - h, d, 6)) / h).abs() < 1e-3);
        }
    }

    #[test]
    fn im_matches_m_for_k2_a1() {
        for i in 0..=1000 {
            let w = i as f64 / 1000.0;
            for d in IDEAL_WEIGHTS {
                assert!(close(map_im(w, d, 2, 1.0), map_m(w, d), 1e-14), "w={w} d={d}");
            }
        }
    }

    #[test]
    fn im_anchors_and_value() {
        for d in IDEAL_WEIGHTS {
            assert_eq!(map_im(d, d, 2, 0.1), d);
            assert!(close(map_im(0.0, d, 2, 0.1), 0.0, 1e-15));
            assert!(close(map_im(1.0, d, 2, 0.1), 1.0, 1e-15));
        }
        // 0.1 + 0.4³·0.1 / (0.4²·0.1 + 0.25) = 0.1 + 0.0064/0.266
        assert!(close(map_im(0.5, 0.1, 2, 0.1), 0.1 + 0.0064 / 0.266, 1e-15));
    }

    #[test]
    fn mip_table_point_a3() {
        let spec = MappingSpec::mip_default();
        let w = [0.86977, 0.10334, 0.02689];
        let g: Vec<f64> = (0..3).map(|s| spec.map(s, w[s])).collect();
        assert_eq!(g, vec![0.1, 0.6, 0.0]);
        for (s, d) in IDEAL_WEIGHTS.iter().enumerate() {
            assert_eq!(spec.map(s, *d), *d);
            assert_eq!(spec.map(s, 1.0), 1.0);
        }
    }

    #[test]
    fn printed_nonop_points_map_as_tabulated() {
        // raw g_s(ω_s) from printed five-digit weights
        let cases = [
            (MappingSpec::pm6(), [0.67828, 0.25528, 0.06644], [0.24252, 0.55068, 0.16737]),
            (MappingSpec::pm6(), [0.00678, 0.36849, 0.62473], [0.00980, 0.59595, 0.31538]),
            (MappingSpec::pm6(), [0.37291, 0.53663, 0.09046], [0.10125, 0.6, 0.22432]),
            (MappingSpec::im_default(), [0.57568, 0.38416, 0.04016], [0.14033, 0.59583, 0.26127]),
        ];
        for (spec, w, g) in cases {
            for s in 0..3 {
                let v = spec.map(s, w[s]);
                assert!(close(v, g[s], 2e-5), "{spec} s={s}: g({}) = {v}, printed {}", w[s], g[s]);
            }
        }
    }

    #[test]
    fn mop_branches() {
        let spec = MappingSpec::mop_default();
        let g = |w| spec.map(0, w);
        assert_eq!(g(0.005), 0.0);
        assert_eq!(g(0.15), 0.1);
        assert_eq!(g(0.3), 0.3);
        assert_eq!(g(0.5), 0.6);
        assert_eq!(g(0.95), 1.0);
        for d in [0.1, 0.3, 0.6] {
            assert_eq!(g(d), d);
        }
        // boundaries are deterministic: [0.45, CFS1] closed
        assert_eq!(g(0.45), 0.6);
        assert_eq!(g(0.94), 0.6);
        assert_eq!(g(0.2), 0.3);
        let fig = MappingSpec::mop(0.04, 0.92, 2.5, 5.0).unwrap();
        assert!(close(fig.map(1, 0.02), 0.05, 1e-15));
        assert!(close(fig.map(2, 0.96), 0.8, 1e-15));
    }

    #[test]
    fn mop_parameter_ranges() {
        assert!(MappingSpec::mop(0.5, 0.94, 0.0, 0.0).is_err());
        assert!(MappingSpec::mop(0.01, 0.5, 0.0, 0.0).is_err());
        assert!(MappingSpec::mop(0.01, 0.94, 10.0, 0.0).is_ok());
        assert!(MappingSpec::mop(0.01, 0.94, 10.5, 0.0).is_err());
        assert!(MappingSpec::mop(0.01, 0.94, 0.0, 7.0).is_err());
        assert!(MappingSpec::mip(0.1, 10.0).is_ok());
        assert!(MappingSpec::mip(0.1, 11.0).is_err());
        assert!(MappingSpec::mip(1.5, 0.0).is_err());
        assert!(MappingSpec::pm(3).is_err());
        assert!(MappingSpec::im(2, -1.0).is_err());
    }

    #[test]
    fn apply_mapping_examples() {
        let w = [0.2, 0.5, 0.3];
        assert_eq!(apply_mapping(&w, &MappingSpec::Js).omega, w);

        let r = apply_mapping(&[0.37291, 0.53663, 0.09046], &MappingSpec::mop_default());
        assert_eq!(r.alpha, [0.3, 0.6, 0.1]);
        for (a, b) in r.omega.iter().zip([0.3, 0.6, 0.1]) {
            assert!(close(*a, b, 1e-15));
        }

        let r = apply_mapping(&[0.86977, 0.10334, 0.02689], &MappingSpec::mip_default());
        assert_eq!(r.alpha, [0.1, 0.6, 0.0]);
        assert!(close(r.omega[0], 1.0 / 7.0, 1e-15));
        assert!(close(r.omega[1], 6.0 / 7.0, 1e-15));
        assert_eq!(r.omega[2], 0.0);
    }

    #[test]
    fn specialized_maps_agree_with_spec() {
        struct Eval(Triple);
        impl MapVisitor for Eval {
            type Output = MappedWeights;
            fn visit<W: WeightMap>(self, map: W) -> MappedWeights {
                apply_mapping(&self.0, &map)
            }
        }
        let w = [0.37291, 0.53663, 0.09046];
        for spec in MappingSpec::all_schemes() {
            assert_eq!(spec.dispatch(Eval(w)), apply_mapping(&w, &spec));
        }
    }

    #[test]
    fn zero_sum_falls_back_to_input() {
        // unnormalized synthetic input with every weight in the k0 = 0 branch
        let w = [0.001, 0.002, 0.003];
        let r = apply_mapping(&w, &MappingSpec::mop_default());
        assert!(r.fallback);
        assert_eq!(r.omega, w);
    }

    #[test]
    fn nonop_predicate_examples() {
        let w = [0.37291, 0.53663, 0.09046];
        let g = [0.10125, 0.60000, 0.22432];
        assert_eq!(is_nonop_instance(&w, &g, NONOP_TOLERANCE), Some((0, 2)));

        let spec = MappingSpec::mop_default();
        let g = [spec.map(0, w[0]), spec.map(1, w[1]), spec.map(2, w[2])];
        assert_eq!(is_nonop_instance(&w, &g, NONOP_TOLERANCE), None);
        assert_eq!(is_nonop_instance(&w, &w, NONOP_TOLERANCE), None);

        let w = [0.2, 0.2, 0.6];
        let g = [map_m(0.2, 0.1), map_m(0.2, 0.6), map_m(0.6, 0.3)];
        assert!(close(g[0], 0.105_88, 1e-5));
        assert!(close(g[1], 0.4, 1e-15));
        assert_eq!(is_nonop_instance(&w, &g, NONOP_TOLERANCE), Some((0, 1)));
    }

    #[test]
    fn classifier_verdicts() {
        assert!(classify_op_set(&MappingSpec::mop_default(), 401).unwrap().is_op());
        assert!(classify_op_set(&MappingSpec::Js, 401).unwrap().is_op());
        let m = classify_op_set(&MappingSpec::M, 101).unwrap();
        assert!(!m.is_op());
        assert!(m.witnesses.iter().any(|w| w.omega_a == w.omega_b));
        assert!(m
            .witnesses
            .iter()
            .all(|w| w.g_a < w.g_b - NONOP_TOLERANCE || w.omega_a == w.omega_b));
        for spec in [MappingSpec::pm6(), MappingSpec::im_default(), MappingSpec::mip_default()] {
            assert!(!classify_op_set(&spec, 101).unwrap().is_op(), "{spec}");
        }
        assert!(classify_op_set(&MappingSpec::M, 50).is_err());
    }
}
