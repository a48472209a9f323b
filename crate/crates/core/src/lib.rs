//! Exact width calculus for slope-aware generalized Heegaard splittings of
//! 3-manifolds with a torus boundary component.
//!
//! The crate works with the combinatorial shadow of a splitting: surfaces
//! are multisets of `(genus, boundary)` pairs, a decomposition is the
//! alternating list of thick and thin surfaces, and a width is the sorted
//! multiset of thick complexities. On top of that sit the transformations
//! (α-stabilization, tubing, Dehn filling), the width-restriction rules
//! for knot exteriors, and the full width table of torus-knot surgeries.
//!
//! ```
//! use sloped_width::{classify, parse_slope, Width};
//!
//! let trefoil = classify(2, 3, parse_slope("-1/6").unwrap()).unwrap();
//! assert_eq!(trefoil.width, Width::from([4, 4]));
//! assert_eq!(trefoil.witness.fill().width().unwrap(), Width::from([2, 2]));
//! ```

pub mod decomposition;
pub mod deduction;
pub mod error;
pub mod oracle;
pub mod slope;
pub mod surface;
pub mod torus_knot;
pub mod width;

pub use decomposition::{Decomposition, ValidationReport, Violation};
pub use deduction::{
    check_width_bounds, deduce, genus_width_bound, honest_by_genus_drop, BoundsCheck,
    Conclusion, Honesty, Tag,
};
pub use error::{Error, Result};
pub use oracle::EnumerationBudget;
pub use slope::{parse_slope, torus_knot_delta, Slope};
pub use surface::{Surface, SurfaceComponent};
pub use torus_knot::{classify, slope_grid, verify_bounds_sharpness, SurgeryClass, SurgeryClassification};
pub use width::{ScaledWidth, Width};
