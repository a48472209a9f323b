//! Width-restriction rules for knot exteriors in S³, the width bounds
//! between closed and sloped decompositions, and the genus-drop honesty
//! criterion.
//!
//! Rules that conclude "either A or B" are returned as one [`Conclusion`]
//! holding the whole disjunction.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::decomposition::Decomposition;
use crate::error::Result;
use crate::oracle::{enumerate_decompositions, EnumerationBudget};
use crate::slope::Slope;
use crate::width::Width;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Tag {
    Unknot,
    TwoBridge,
    SlopeMustBeMeridian,
    EssentialTorusInExterior,
    EssentialAnnulusAndFilledConnectSumOfLensSpaces,
    ClosedEssentialSurface,
    FilledHaken,
    FilledConnectSumTwoLensSpaces,
    InconsistentForKnotExterior,
}

pub mod rule {
    pub const WIDTH_ONE: &str = "width-contains-one";
    pub const WIDTH_ZERO: &str = "width-contains-zero";
    pub const WIDTH_THREE: &str = "width-equals-three";
    pub const BELOW_FOUR: &str = "width-contains-three-or-below-three";
    pub const PLANAR_HEEGAARD: &str = "planar-heegaard-surface";
    pub const MULTIPLE_THICK: &str = "multiple-thick-surfaces";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub rule: &'static str,
    pub disjunction: Vec<Tag>,
}

impl Conclusion {
    fn new(rule: &'static str, disjunction: impl Into<Vec<Tag>>) -> Conclusion {
        Conclusion {
            rule,
            disjunction: disjunction.into(),
        }
    }

    pub fn is_definite(&self) -> bool {
        self.disjunction.len() == 1
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: Vec<_> = self.disjunction.iter().map(|t| format!("{t:?}")).collect();
        write!(f, "{}: {}", self.rule, tags.join(" | "))
    }
}

/// Applies the width-restriction rules to a width realized at `slope` in
/// the exterior of a knot in S³. `single_planar` says the width is
/// realized by one planar Heegaard surface.
///
/// A width containing 1 forces the unknot, and then nothing else is
/// reported since every other rule assumes a nontrivial knot.
pub fn deduce(width: &Width, slope: Slope, single_planar: bool) -> Vec<Conclusion> {
    use Tag::*;

    if width.contains(1) {
        return vec![Conclusion::new(rule::WIDTH_ONE, [Unknot])];
    }

    let mut out = Vec::new();
    if width.contains(0) {
        // a thick sphere next to the boundary forces an essential sphere
        out.push(Conclusion::new(rule::WIDTH_ZERO, [InconsistentForKnotExterior]));
    }

    let three = Width::single(3);
    if *width == three {
        out.push(Conclusion::new(rule::WIDTH_THREE, [TwoBridge]));
        if slope != Slope::Meridian {
            out.push(Conclusion::new(rule::WIDTH_THREE, [SlopeMustBeMeridian]));
        }
    } else if width.contains(3) || *width < three {
        out.push(Conclusion::new(
            rule::BELOW_FOUR,
            [EssentialTorusInExterior, EssentialAnnulusAndFilledConnectSumOfLensSpaces],
        ));
    }

    if single_planar && slope != Slope::Meridian {
        out.push(Conclusion::new(rule::PLANAR_HEEGAARD, [SlopeMustBeMeridian]));
    }

    if width.len() >= 2 && slope.is_rational() {
        out.push(Conclusion::new(
            rule::MULTIPLE_THICK,
            [ClosedEssentialSurface, FilledHaken, FilledConnectSumTwoLensSpaces],
        ));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsCheck {
    pub lower_ok: bool,
    pub upper_ok: bool,
}

/// Checks `⌈2/3 · closed⌉ <= sloped <= closed +₁ 2`.
pub fn check_width_bounds(closed_width: &Width, sloped_width: &Width) -> Result<BoundsCheck> {
    let lower = closed_width.scale(Ratio::new(2, 3))?.ceil();
    let upper = closed_width.add_at(1, 2)?;
    Ok(BoundsCheck {
        lower_ok: lower <= *sloped_width,
        upper_ok: *sloped_width <= upper,
    })
}

/// Upper bound `{3g + 1}` on every sloped width of a manifold with a genus
/// `g` Heegaard splitting.
pub fn genus_width_bound(genus: u32) -> Width {
    Width::single(3 * genus + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Honesty {
    Honest,
    Unknown,
}

/// A slope whose filling has smaller Heegaard genus is honest. The
/// converse is not known, hence `Unknown` rather than "dishonest".
pub fn honest_by_genus_drop(genus_manifold: u32, genus_filled: u32, slope: Slope) -> Honesty {
    if slope.is_closed() {
        return Honesty::Unknown;
    }
    let meridian_in_s3 = slope == Slope::Meridian && genus_filled == 0;
    if genus_filled < genus_manifold || meridian_in_s3 {
        Honesty::Honest
    } else {
        Honesty::Unknown
    }
}

/// Can `d` sit in the exterior of a nontrivial knot? Its surfaces are
/// separating (even boundary count), the exterior is irreducible (no
/// sphere components) and its boundary is incompressible (no disks).
pub fn admissible_in_knot_exterior(d: &Decomposition) -> bool {
    d.interleaved().all(|s| {
        s.total_boundary() % 2 == 0
            && s
                .components()
                .iter()
                .all(|c| !c.is_sphere() && (c.genus, c.boundary) != (0, 1))
    })
}

/// Searches the budget for single-component decompositions of width `width`
/// at `slope` that a thin decomposition of a knot exterior could have:
/// strictly valid, admissible in a knot exterior, and capping off to a
/// decomposition no thinner than `filled_width`, the width of the filling.
pub fn knot_exterior_witnesses(
    width: &Width,
    slope: Slope,
    filled_width: &Width,
    budget: &EnumerationBudget,
) -> Vec<Decomposition> {
    enumerate_decompositions(budget, slope)
        .into_iter()
        .filter(|d| d.thick_complexities() == *width)
        .filter(|d| d.validate(true).is_ok())
        .filter(admissible_in_knot_exterior)
        .filter(|d| d.fill().thick_complexities() >= *filled_width)
        .collect()
}

/// How a candidate width is ruled out for a slope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exclusion {
    pub width: Width,
    /// Rule conclusions that contradict a nontrivial torus knot at a
    /// rational slope.
    pub rules: Vec<Conclusion>,
    /// Number of decompositions the witness search found.
    pub witnesses: usize,
}

impl Exclusion {
    pub fn by_rules(&self) -> bool {
        !self.rules.is_empty()
    }

    pub fn by_search(&self) -> bool {
        self.witnesses == 0
    }

    pub fn is_excluded(&self) -> bool {
        self.by_rules() || self.by_search()
    }
}

/// Runs both exclusion routes for `width` at the rational `slope` of a
/// torus knot whose filling has width `filled_width`.
pub fn exclude_width(
    width: &Width,
    slope: Slope,
    filled_width: &Width,
    budget: &EnumerationBudget,
) -> Exclusion {
    let rules = deduce(width, slope, false)
        .into_iter()
        .filter(|c| c.rule != rule::MULTIPLE_THICK)
        .collect();
    let witnesses = knot_exterior_witnesses(width, slope, filled_width, budget).len();
    Exclusion {
        width: width.clone(),
        rules,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Surface;
    use Tag::*;

    const RATIONAL: Slope = Slope::Rational { num: 1, den: 2 };

    fn tags(conclusions: &[Conclusion]) -> Vec<Vec<Tag>> {
        conclusions.iter().map(|c| c.disjunction.clone()).collect()
    }

    #[test]
    fn unknot_suppresses_everything() {
        for slope in [RATIONAL, Slope::Meridian, Slope::Closed] {
            assert_eq!(tags(&deduce(&Width::single(1), slope, false)), vec![vec![Unknot]]);
        }
        assert_eq!(
            tags(&deduce(&Width::from([4, 3, 1]), RATIONAL, true)),
            vec![vec![Unknot]]
        );
    }

    #[test]
    fn two_bridge() {
        assert_eq!(
            tags(&deduce(&Width::single(3), Slope::Meridian, true)),
            vec![vec![TwoBridge]]
        );
        assert_eq!(
            tags(&deduce(&Width::single(3), RATIONAL, false)),
            vec![vec![TwoBridge], vec![SlopeMustBeMeridian]]
        );
    }

    #[test]
    fn contains_three() {
        let out = deduce(&Width::from([4, 3]), RATIONAL, false);
        assert_eq!(
            tags(&out),
            vec![
                vec![EssentialTorusInExterior, EssentialAnnulusAndFilledConnectSumOfLensSpaces],
                vec![ClosedEssentialSurface, FilledHaken, FilledConnectSumTwoLensSpaces],
            ]
        );
        assert_eq!(out[0].rule, rule::BELOW_FOUR);
        assert_eq!(out[1].rule, rule::MULTIPLE_THICK);
    }

    #[test]
    fn below_three() {
        let out = deduce(&Width::from([2, 2]), RATIONAL, false);
        assert!(out.iter().any(|c| c.rule == rule::BELOW_FOUR));
        let out = deduce(&Width::single(0), RATIONAL, false);
        assert_eq!(out[0].disjunction, vec![InconsistentForKnotExterior]);
        assert!(out.iter().any(|c| c.rule == rule::BELOW_FOUR));
    }

    #[test]
    fn planar_and_trichotomy() {
        let out = deduce(&Width::single(5), RATIONAL, true);
        assert_eq!(tags(&out), vec![vec![SlopeMustBeMeridian]]);
        assert!(deduce(&Width::single(5), Slope::Meridian, true).is_empty());
        assert!(deduce(&Width::single(7), RATIONAL, false).is_empty());
        // the trichotomy needs a rational slope
        assert!(deduce(&Width::from([5, 5]), Slope::Meridian, false).is_empty());
    }

    #[test]
    fn bounds() {
        let five = Width::single(5);
        let check = |sloped: Width| check_width_bounds(&five, &sloped).unwrap();
        assert_eq!(check(Width::single(4)), BoundsCheck { lower_ok: true, upper_ok: true });
        assert_eq!(check(Width::single(7)), BoundsCheck { lower_ok: true, upper_ok: true });
        assert_eq!(check(Width::single(8)), BoundsCheck { lower_ok: true, upper_ok: false });
        assert_eq!(check(Width::single(3)), BoundsCheck { lower_ok: false, upper_ok: true });
        assert!(check_width_bounds(&Width::empty(), &five).is_err());
    }

    #[test]
    fn upper_bound_attained_by_stabilization() {
        for c in 1..=30 {
            let closed = Width::single(c);
            let check = check_width_bounds(&closed, &closed.add_at(1, 2).unwrap()).unwrap();
            assert!(check.upper_ok);
        }
    }

    #[test]
    fn genus_bound() {
        assert_eq!(genus_width_bound(2), Width::single(7));
        assert_eq!(genus_width_bound(0), Width::single(1));
        assert_eq!(genus_width_bound(1), Width::single(4));
        // a stabilized genus-1 Heegaard surface meets the bound
        let torus = Decomposition::heegaard(Slope::Closed, Surface::connected(1, 0));
        let stabilized = torus.alpha_stabilize(RATIONAL, 0).unwrap();
        assert_eq!(stabilized.width().unwrap(), genus_width_bound(1));
    }

    #[test]
    fn honesty() {
        assert_eq!(honest_by_genus_drop(2, 1, RATIONAL), Honesty::Honest);
        assert_eq!(honest_by_genus_drop(2, 0, Slope::Meridian), Honesty::Honest);
        assert_eq!(honest_by_genus_drop(2, 2, RATIONAL), Honesty::Unknown);
        assert_eq!(honest_by_genus_drop(2, 3, RATIONAL), Honesty::Unknown);
        assert_eq!(honest_by_genus_drop(2, 1, Slope::Closed), Honesty::Unknown);
    }

    #[test]
    fn admissibility() {
        let annulus_thin = Decomposition::new(
            RATIONAL,
            vec![Surface::connected(1, 2), Surface::connected(1, 2)],
            vec![Surface::connected(0, 2)],
        );
        assert!(admissible_in_knot_exterior(&annulus_thin));
        let disk = Decomposition::new(
            RATIONAL,
            vec![Surface::connected(1, 2), Surface::connected(1, 2)],
            vec![Surface::connected(0, 1)],
        );
        assert!(!admissible_in_knot_exterior(&disk));
        let odd = Decomposition::heegaard(RATIONAL, Surface::connected(1, 3));
        assert!(!admissible_in_knot_exterior(&odd));
    }
}
