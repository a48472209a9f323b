use proptest::prelude::*;

use sloped_width::oracle::{enumerate_decompositions, EnumerationBudget};
use sloped_width::{Decomposition, Slope, Surface, SurfaceComponent};

fn surface() -> impl Strategy<Value = Surface> {
    prop::collection::vec((0u32..4, 0u32..5), 1..3).prop_map(|parts| {
        parts
            .into_iter()
            .map(|(g, b)| SurfaceComponent::new(g, b))
            .collect()
    })
}

fn slope() -> impl Strategy<Value = Slope> {
    prop_oneof![
        (-20i64..20, 1i64..20).prop_map(|(r, s)| Slope::rational(r, s).unwrap()),
        Just(Slope::Meridian),
        Just(Slope::Closed),
    ]
}

fn decomposition() -> impl Strategy<Value = Decomposition> {
    (slope(), 1usize..4)
        .prop_flat_map(|(slope, k)| {
            (
                Just(slope),
                prop::collection::vec(surface(), k),
                prop::collection::vec(surface(), k - 1),
                any::<bool>(),
            )
        })
        .prop_map(|(slope, mut thick, mut thin, stabilized)| {
            if slope.is_closed() {
                for s in thick.iter_mut().chain(thin.iter_mut()) {
                    *s = s.cap_off();
                }
            }
            Decomposition {
                slope,
                thick,
                thin,
                stabilized,
            }
        })
}

fn valid_decomposition() -> impl Strategy<Value = Decomposition> {
    decomposition().prop_filter("valid", |d| d.is_valid())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn stabilization_adds_two_at_the_stabilized_entry(d in valid_decomposition(), pick in 0usize..3) {
        let index = pick % d.thick.len();
        let alpha = if d.slope.is_closed() { Slope::Rational { num: 2, den: 3 } } else { d.slope };
        let before = d.width().unwrap();
        match d.alpha_stabilize(alpha, index) {
            Ok(out) => {
                let c = d.thick[index].complexity();
                let position = before.position_of(c).unwrap();
                prop_assert_eq!(out.width().unwrap(), before.add_at(position, 2).unwrap());
                prop_assert!(out.stabilized);
                prop_assert_eq!(out.slope, alpha);
            }
            Err(sloped_width::Error::SphereStabilization(_)) => {
                prop_assert!(d.thick[index].components().iter().all(SurfaceComponent::is_sphere));
            }
            Err(sloped_width::Error::InvalidDecomposition(_)) => {
                // only the interval condition can break
                prop_assert!(!d.slope.is_closed());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn fill_never_thickens(d in valid_decomposition()) {
        let filled = d.fill();
        prop_assert_eq!(filled.slope, Slope::Closed);
        prop_assert_eq!(filled.stabilized, d.stabilized);
        for (before, after) in d.thick.iter().zip(&filled.thick) {
            prop_assert!(after.complexity() <= before.complexity());
        }
        let (w, fw) = (d.thick_complexities(), filled.thick_complexities());
        for (a, b) in fw.entries().iter().zip(w.entries()) {
            prop_assert!(a <= b);
        }
        prop_assert_eq!(filled.fill(), filled.clone());
        // same number of surfaces, none with boundary
        prop_assert!(filled.interleaved().all(|s| !s.has_boundary()));
        prop_assert_eq!(filled.thin.len() + 1, filled.thick.len());
    }

    #[test]
    fn tubing_adds_half_the_boundary(d in valid_decomposition()) {
        prop_assume!(!d.slope.is_closed());
        let all_even = d.interleaved().all(|s| s.components().iter().all(|c| c.boundary % 2 == 0));
        match d.tube_to_closed() {
            Ok(out) => {
                prop_assert!(all_even);
                prop_assert!(out.is_valid());
                for (before, after) in d.thick.iter().zip(&out.thick) {
                    prop_assert_eq!(after.complexity(), before.complexity() + before.total_boundary() / 2);
                    if before.components().iter().all(|c| c.genus >= 1) {
                        // 2·c(Š) < 3·c(S)
                        prop_assert!(2 * after.complexity() < 3 * before.complexity());
                    }
                }
            }
            Err(sloped_width::Error::OddBoundary { .. }) => prop_assert!(!all_even),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn json_roundtrip(d in decomposition()) {
        let json = d.to_json();
        let back = Decomposition::from_json(&json).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_json(), json);
    }

    #[test]
    fn validation_is_deterministic_and_strict_is_stronger(d in decomposition()) {
        let loose = d.validate(false);
        let strict = d.validate(true);
        prop_assert_eq!(&loose, &d.validate(false));
        prop_assert_eq!(&loose.violations, &strict.violations);
        if strict.is_ok() {
            prop_assert!(loose.is_ok());
        }
    }
}

#[test]
fn enumerated_even_decompositions_tube_cleanly() {
    let budget = EnumerationBudget {
        max_genus: 2,
        max_boundary: 4,
        max_thick: 2,
        ..EnumerationBudget::default()
    };
    let slope = Slope::Rational { num: 1, den: 3 };
    let all = enumerate_decompositions(&budget, slope);
    let mut checked = 0;
    for d in all
        .iter()
        .filter(|d| d.interleaved().all(|s| s.total_boundary() % 2 == 0))
    {
        let out = d.tube_to_closed().unwrap();
        assert!(out.is_valid(), "{}", d.to_json());
        let delta: Vec<u32> = d.thick.iter().map(|s| s.total_boundary() / 2).collect();
        for ((before, after), half) in d.thick.iter().zip(&out.thick).zip(delta) {
            assert_eq!(after.complexity(), before.complexity() + half);
        }
        checked += 1;
    }
    assert!(checked > 50, "only {checked} decompositions checked");
}

#[test]
fn fill_of_torus_knot_witnesses_stays_valid() {
    for slope in sloped_width::slope_grid(6, 6) {
        let c = sloped_width::classify(3, 5, slope).unwrap();
        assert!(c.witness.fill().is_valid());
        assert!(c.witness.fill().width().unwrap() <= c.width);
    }
}
