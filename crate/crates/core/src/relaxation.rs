//! Convex relaxation sets for the estimation step: the unit disk for PSK,
//! the box for QAM, and the whole plane for the unconstrained ridge
//! baseline. Each set acts per complex coordinate; vector projections apply
//! it coordinatewise.

use num_complex::Complex64;

use crate::{Constellation, ConstellationKind, Error, Result};

/// A closed convex superset of a constellation, containing the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RelaxationSet {
    /// `{ z : |z| <= radius }`.
    Disk { radius: f64 },
    /// `{ a + jb : |a| <= halfwidth, |b| <= halfwidth }`.
    Box { halfwidth: f64 },
    /// The whole complex plane (no constraint); realizes the RLS baseline.
    Unconstrained,
}

impl RelaxationSet {
    pub fn disk(radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Config(format!(
                "disk radius must be positive and finite, got {radius}"
            )));
        }
        Ok(Self::Disk { radius })
    }

    pub fn boxed(halfwidth: f64) -> Result<Self> {
        if !(halfwidth > 0.0) || !halfwidth.is_finite() {
            return Err(Error::Config(format!(
                "box halfwidth must be positive and finite, got {halfwidth}"
            )));
        }
        Ok(Self::Box { halfwidth })
    }

    /// The conventional relaxation for a constellation: the unit disk for
    /// PSK, the tight box `|a|,|b| <= (sqrt(M)-1)/sqrt(E_avg)` for QAM.
    pub fn default_for(c: &Constellation) -> Self {
        match c.kind() {
            ConstellationKind::Psk => Self::Disk { radius: 1.0 },
            ConstellationKind::Qam => {
                let side = (c.symbol_count() as f64).sqrt();
                Self::Box {
                    halfwidth: (side - 1.0) / c.e_avg().sqrt(),
                }
            }
        }
    }

    /// Parse a relaxation name (`"disk"`, `"box"`, `"none"`); the paired
    /// constellation supplies the default radius/halfwidth.
    pub fn from_name(name: &str, c: &Constellation) -> Result<Self> {
        match name {
            "disk" => Ok(Self::Disk { radius: 1.0 }),
            "box" => Ok(match c.kind() {
                ConstellationKind::Qam => Self::default_for(c),
                // A box around a PSK constellation must span the unit circle.
                ConstellationKind::Psk => Self::Box { halfwidth: 1.0 },
            }),
            "none" => Ok(Self::Unconstrained),
            other => Err(Error::Config(format!(
                "bad relaxation '{other}'; expected disk, box or none"
            ))),
        }
    }

    /// Nearest point of the set to `z`.
    pub fn project(&self, z: Complex64) -> Result<Complex64> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::Input(format!("non-finite projection input {z}")));
        }
        Ok(self.project_unchecked(z))
    }

    #[inline]
    pub(crate) fn project_unchecked(&self, z: Complex64) -> Complex64 {
        match *self {
            Self::Disk { radius } => {
                let r = z.norm();
                if r <= radius {
                    z
                } else {
                    z * (radius / r)
                }
            }
            Self::Box { halfwidth } => Complex64::new(
                z.re.clamp(-halfwidth, halfwidth),
                z.im.clamp(-halfwidth, halfwidth),
            ),
            Self::Unconstrained => z,
        }
    }

    /// Squared Euclidean distance from `z` to the set; zero iff `z` is a
    /// member.
    pub fn dist_sq(&self, z: Complex64) -> Result<f64> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::Input(format!("non-finite distance input {z}")));
        }
        Ok(self.dist_sq_unchecked(z))
    }

    #[inline]
    pub(crate) fn dist_sq_unchecked(&self, z: Complex64) -> f64 {
        match *self {
            Self::Disk { radius } => {
                let excess = z.norm() - radius;
                if excess > 0.0 {
                    excess * excess
                } else {
                    0.0
                }
            }
            Self::Box { halfwidth } => {
                let dr = (z.re.abs() - halfwidth).max(0.0);
                let di = (z.im.abs() - halfwidth).max(0.0);
                dr * dr + di * di
            }
            Self::Unconstrained => 0.0,
        }
    }

    /// Membership test (up to floating-point roundoff of the distance).
    pub fn contains(&self, z: Complex64) -> bool {
        self.dist_sq_unchecked(z) <= 1e-24
    }

    /// Check that every point of `c` lies inside the set. Scenario and
    /// predictor construction require this pairing.
    pub fn check_contains_constellation(&self, c: &Constellation) -> Result<()> {
        for p in c.points() {
            if !self.contains(*p) {
                return Err(Error::Config(format!(
                    "constellation point {p} lies outside the relaxation set {self:?}"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn disk_projection_examples() {
        let v = RelaxationSet::disk(1.0).unwrap();
        // Interior points are untouched.
        assert_eq!(v.project(c(0.3, -0.4)).unwrap(), c(0.3, -0.4));
        // Exterior points land on the circle.
        let p = v.project(c(3.0, 4.0)).unwrap();
        assert_abs_diff_eq!(p.re, 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(p.im, 0.8, epsilon = 1e-15);
    }

    #[test]
    fn box_projection_clamps_per_coordinate() {
        let s = 10.0_f64.sqrt();
        let v = RelaxationSet::boxed(3.0 / s).unwrap();
        let p = v.project(c(4.0 / s, -5.0 / s)).unwrap();
        assert_abs_diff_eq!(p.re, 3.0 / s, epsilon = 1e-15);
        assert_abs_diff_eq!(p.im, -3.0 / s, epsilon = 1e-15);
    }

    #[test]
    fn unconstrained_is_the_identity() {
        let v = RelaxationSet::Unconstrained;
        assert_eq!(v.project(c(123.0, -7.0)).unwrap(), c(123.0, -7.0));
        assert_eq!(v.dist_sq(c(5.0, 5.0)).unwrap(), 0.0);
    }

    #[test]
    fn distance_examples() {
        let disk = RelaxationSet::disk(1.0).unwrap();
        assert_abs_diff_eq!(disk.dist_sq(c(2.0, 0.0)).unwrap(), 1.0, epsilon = 1e-15);
        let s = 10.0_f64.sqrt();
        let bx = RelaxationSet::boxed(3.0 / s).unwrap();
        assert_abs_diff_eq!(bx.dist_sq(c(4.0 / s, 0.0)).unwrap(), 0.1, epsilon = 1e-15);
    }

    #[test]
    fn defaults_match_the_paired_constellation() {
        let psk16 = Constellation::psk(16).unwrap();
        assert_eq!(
            RelaxationSet::default_for(&psk16),
            RelaxationSet::Disk { radius: 1.0 }
        );
        let qam16 = Constellation::qam(16).unwrap();
        match RelaxationSet::default_for(&qam16) {
            RelaxationSet::Box { halfwidth } => {
                assert_abs_diff_eq!(halfwidth, 3.0 / 10.0_f64.sqrt(), epsilon = 1e-15)
            }
            other => panic!("expected box, got {other:?}"),
        }
        let qam64 = Constellation::qam(64).unwrap();
        match RelaxationSet::default_for(&qam64) {
            RelaxationSet::Box { halfwidth } => {
                assert_abs_diff_eq!(halfwidth, 7.0 / 42.0_f64.sqrt(), epsilon = 1e-15)
            }
            other => panic!("expected box, got {other:?}"),
        }
    }

    #[test]
    fn non_finite_inputs_are_rejected() {
        let v = RelaxationSet::disk(1.0).unwrap();
        assert!(v.project(c(f64::INFINITY, 0.0)).is_err());
        assert!(v.dist_sq(c(0.0, f64::NAN)).is_err());
        assert!(RelaxationSet::disk(0.0).is_err());
        assert!(RelaxationSet::boxed(-1.0).is_err());
    }

    #[test]
    fn pairing_check_rejects_points_outside_the_set() {
        let qam16 = Constellation::qam(16).unwrap();
        let disk = RelaxationSet::disk(1.0).unwrap();
        assert!(disk.check_contains_constellation(&qam16).is_err());
        let bx = RelaxationSet::default_for(&qam16);
        assert!(bx.check_contains_constellation(&qam16).is_ok());
    }

    fn arb_set() -> impl Strategy<Value = RelaxationSet> {
        prop_oneof![
            (0.5f64..2.0).prop_map(|r| RelaxationSet::Disk { radius: r }),
            (0.5f64..2.0).prop_map(|h| RelaxationSet::Box { halfwidth: h }),
            Just(RelaxationSet::Unconstrained),
        ]
    }

    proptest! {
        #[test]
        fn projection_is_idempotent(v in arb_set(), re in -5.0f64..5.0, im in -5.0f64..5.0) {
            let z = c(re, im);
            let p = v.project(z).unwrap();
            prop_assert_eq!(v.project(p).unwrap(), p);
        }

        #[test]
        fn projection_is_nonexpansive(
            v in arb_set(),
            re1 in -5.0f64..5.0, im1 in -5.0f64..5.0,
            re2 in -5.0f64..5.0, im2 in -5.0f64..5.0,
        ) {
            let (z1, z2) = (c(re1, im1), c(re2, im2));
            let d_in = (z1 - z2).norm();
            let d_out = (v.project(z1).unwrap() - v.project(z2).unwrap()).norm();
            prop_assert!(d_out <= d_in + 1e-12);
        }

        #[test]
        fn distance_vanishes_exactly_on_members(v in arb_set(), re in -5.0f64..5.0, im in -5.0f64..5.0) {
            let z = c(re, im);
            let p = v.project(z).unwrap();
            let d = v.dist_sq(z).unwrap();
            prop_assert_eq!(d == 0.0, p == z);
            // dist_sq agrees with the squared projection residual.
            prop_assert!((d - (z - p).norm_sqr()).abs() < 1e-12);
        }

        #[test]
        fn swap_symmetry(v in arb_set(), re in -5.0f64..5.0, im in -5.0f64..5.0) {
            let p = v.project(c(re, im)).unwrap();
            let q = v.project(c(im, re)).unwrap();
            prop_assert!((p.re - q.im).abs() < 1e-12 && (p.im - q.re).abs() < 1e-12);
        }
    }
}
