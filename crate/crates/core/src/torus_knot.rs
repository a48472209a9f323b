//! Widths of `(p, q)` torus-knot exteriors over every slope, together with
//! the filled manifolds and their widths.
//!
//! With `Δ = |p·q·r + s|` for the slope `r/s`:
//!
//! | Δ        | width   | filling                          | filled width |
//! |----------|---------|----------------------------------|--------------|
//! | 1        | {4}     | lens space `L(|q|, p·s²)`        | {2}          |
//! | 0        | {4,4}   | `L(|p|, |q|) # L(|q|, |p|)`       | {2,2}        |
//! | other    | {7}     | SFS over S² with 3 exceptional   | {5}          |
//!
//! The meridian has width {4} (filling gives S³) and the closed exterior
//! has width {5}. The Seifert fibered filling has Heegaard genus two and
//! the capped-off genus-2 surface has complexity 5.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::decomposition::Decomposition;
use crate::error::Result;
use crate::slope::{check_torus_knot, torus_knot_delta, Slope};
use crate::surface::Surface;
use crate::width::Width;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SurgeryClass {
    Lens,
    Reducible,
    SeifertFibered,
    Meridian,
    Closed,
}

impl fmt::Display for SurgeryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SurgeryClass::Lens => "Lens",
            SurgeryClass::Reducible => "Reducible",
            SurgeryClass::SeifertFibered => "SeifertFibered",
            SurgeryClass::Meridian => "Meridian",
            SurgeryClass::Closed => "Closed",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryClassification {
    pub p: i64,
    pub q: i64,
    pub slope: Slope,
    pub class: SurgeryClass,
    pub delta: Option<u64>,
    pub width: Width,
    pub filled_manifold: Option<String>,
    pub filled_width: Option<Width>,
    /// A decomposition realizing `width`.
    pub witness: Decomposition,
}

/// Width of the exterior of the `(p, q)` torus knot at `slope`.
pub fn classify(p: i64, q: i64, slope: Slope) -> Result<SurgeryClassification> {
    check_torus_knot(p, q)?;
    let twice_punctured_torus = || Surface::connected(1, 2);

    let (class, delta, filled_manifold, filled_width, witness) = match slope {
        Slope::Closed => (
            SurgeryClass::Closed,
            None,
            None,
            None,
            Decomposition::heegaard(slope, Surface::connected(2, 0)),
        ),
        Slope::Meridian => (
            SurgeryClass::Meridian,
            None,
            Some("S³".to_string()),
            None,
            Decomposition::heegaard(slope, twice_punctured_torus()),
        ),
        Slope::Rational { den, .. } => {
            let delta = torus_knot_delta(p, q, slope)?;
            match delta {
                1 => (
                    SurgeryClass::Lens,
                    Some(delta),
                    Some(lens_space(p, q, den)),
                    Some(Width::single(2)),
                    Decomposition::heegaard(slope, twice_punctured_torus()),
                ),
                0 => (
                    SurgeryClass::Reducible,
                    Some(delta),
                    Some(format!(
                        "L({0}, {1}) # L({1}, {0})",
                        p.unsigned_abs(),
                        q.unsigned_abs()
                    )),
                    Some(Width::from([2, 2])),
                    Decomposition::new(
                        slope,
                        vec![twice_punctured_torus(), twice_punctured_torus()],
                        // the cabling annulus
                        vec![Surface::connected(0, 2)],
                    ),
                ),
                _ => (
                    SurgeryClass::SeifertFibered,
                    Some(delta),
                    Some("SFS(S²; 3 exceptional fibers)".to_string()),
                    Some(Width::single(5)),
                    Decomposition::heegaard(slope, Surface::connected(2, 2)),
                ),
            }
        }
    };

    let width = witness.thick_complexities();
    Ok(SurgeryClassification {
        p,
        q,
        slope,
        class,
        delta,
        width,
        filled_manifold,
        filled_width,
        witness,
    })
}

/// `L(|q|, p·s²)`, parameters left unreduced.
fn lens_space(p: i64, q: i64, den: i64) -> String {
    let second = i128::from(p) * i128::from(den) * i128::from(den);
    format!("L({}, {second})", q.unsigned_abs())
}

/// Slopes `r/s` with `|r| <= rmax`, `1 <= s <= smax` and `gcd(r, s) = 1`,
/// sorted by `(r, s)`.
pub fn slope_grid(rmax: u32, smax: u32) -> Vec<Slope> {
    let rmax = i64::from(rmax);
    let mut slopes = Vec::new();
    for r in -rmax..=rmax {
        for s in 1..=i64::from(smax) {
            if num_integer::gcd(r, s) == 1 {
                slopes.push(Slope::Rational { num: r, den: s });
            }
        }
    }
    slopes
}

/// Witnesses that the width bounds `⌈2/3·w(∅)⌉ <= w(α) <= w(∅) +₁ 2` are
/// both attained by the torus knot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub p: i64,
    pub q: i64,
    pub closed_width: Width,
    pub lower_bound: Width,
    pub upper_bound: Width,
    pub lower_witness: Option<Slope>,
    pub upper_witness: Option<Slope>,
    pub lower_tight: bool,
    pub upper_tight: bool,
}

pub fn verify_bounds_sharpness(p: i64, q: i64) -> Result<SharpnessReport> {
    check_torus_knot(p, q)?;
    let closed_width = classify(p, q, Slope::Closed)?.width;
    let lower_bound = closed_width.scale(Ratio::new(2, 3))?.ceil();
    let upper_bound = closed_width.add_at(1, 2)?;

    let pq = (i128::from(p) * i128::from(q)).unsigned_abs() + 1;
    let bound = i64::try_from(pq).unwrap_or(i64::MAX);
    let mut lower_witness = None;
    let mut upper_witness = None;
    'search: for s in 1..=bound {
        for magnitude in 0..=bound {
            for r in [magnitude, -magnitude] {
                if (r == -magnitude && magnitude == 0) || num_integer::gcd(r, s) != 1 {
                    continue;
                }
                let slope = Slope::Rational { num: r, den: s };
                let width = classify(p, q, slope)?.width;
                if lower_witness.is_none() && width == lower_bound {
                    lower_witness = Some(slope);
                }
                if upper_witness.is_none() && width == upper_bound {
                    upper_witness = Some(slope);
                }
                if lower_witness.is_some() && upper_witness.is_some() {
                    break 'search;
                }
            }
        }
    }

    Ok(SharpnessReport {
        p,
        q,
        lower_tight: lower_witness.is_some(),
        upper_tight: upper_witness.is_some(),
        closed_width,
        lower_bound,
        upper_bound,
        lower_witness,
        upper_witness,
    })
}
