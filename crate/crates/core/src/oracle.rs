//! Brute-force enumerators and independent re-computations used to check
//! the rest of the crate on small instances.
//!
//! Nothing here calls into the code it is meant to check, except the
//! validity filter of [`enumerate_decompositions`], which is by design a
//! post-filter over a blind enumeration.

use std::cmp::Ordering;

use crate::decomposition::Decomposition;
use crate::slope::Slope;
use crate::surface::{Surface, SurfaceComponent};
use crate::width::Width;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_genus: u32,
    pub max_boundary: u32,
    pub max_entry: u32,
    pub max_length: usize,
    pub max_thick: usize,
}

impl Default for EnumerationBudget {
    fn default() -> EnumerationBudget {
        EnumerationBudget {
            max_genus: 5,
            max_boundary: 8,
            max_entry: 6,
            max_length: 3,
            max_thick: 3,
        }
    }
}

/// Every `(g, p)` in the box, genus-major.
pub fn enumerate_components(max_genus: u32, max_boundary: u32) -> Vec<SurfaceComponent> {
    (0..=max_genus)
        .flat_map(|g| (0..=max_boundary).map(move |p| SurfaceComponent::new(g, p)))
        .collect()
}

/// Every canonical width with entries in `[0, max_entry]` and length in
/// `[1, max_length]`, shortest first, ascending within a length.
pub fn enumerate_widths(max_entry: u32, max_length: usize) -> Vec<Width> {
    fn extend(prefix: &mut Vec<u32>, ceiling: u32, remaining: usize, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=ceiling {
            prefix.push(e);
            extend(prefix, e, remaining - 1, out);
            prefix.pop();
        }
    }

    let mut widths = Vec::new();
    for len in 1..=max_length {
        let mut sequences = Vec::new();
        extend(&mut Vec::new(), max_entry, len, &mut sequences);
        sequences.sort();
        widths.extend(sequences.into_iter().map(Width::from));
    }
    widths
}

/// Number of multisets of size `k` drawn from `n` values, `C(n + k - 1, k)`.
pub fn multiset_count(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + i - 1) / i)
}

/// Complexity computed from the Euler characteristic: `1 - χ + g`, with
/// spheres pinned to 0.
pub fn complexity_from_euler(genus: u32, boundary: u32) -> i64 {
    let (g, p) = (i64::from(genus), i64::from(boundary));
    if g == 0 && p == 0 {
        return 0;
    }
    let chi = 2 - 2 * g - p;
    1 - chi + g
}

/// Lexicographic comparison of two multisets: sort both non-increasing,
/// compare elementwise, a proper prefix loses.
pub fn brute_force_compare(a: &[u32], b: &[u32]) -> Ordering {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| y.cmp(x));
    b.sort_by(|x, y| y.cmp(x));
    let mut i = 0;
    loop {
        match (a.get(i), b.get(i)) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x != y => {
                return if x < y { Ordering::Less } else { Ordering::Greater };
            }
            _ => i += 1,
        }
    }
}

/// Every valid decomposition with at most `max_thick` thick surfaces, each
/// surface a single component inside the genus/boundary box. Closed slopes
/// only use closed components.
///
/// The search prunes on the thin/thick monotonicity conditions and then
/// filters everything through the non-strict validator.
pub fn enumerate_decompositions(budget: &EnumerationBudget, slope: Slope) -> Vec<Decomposition> {
    let max_boundary = if slope.is_closed() { 0 } else { budget.max_boundary };
    let components = enumerate_components(budget.max_genus, max_boundary);

    // interleaved sequences S1 F1 S2 ... of odd length 2k - 1
    fn extend(
        components: &[SurfaceComponent],
        sequence: &mut Vec<SurfaceComponent>,
        target: usize,
        out: &mut Vec<Vec<SurfaceComponent>>,
    ) {
        if sequence.len() == target {
            out.push(sequence.clone());
            return;
        }
        let position = sequence.len();
        for &c in components {
            if position % 2 == 1 {
                // thin: no more complex and no more boundary than S before it
                let prev = sequence[position - 1];
                if c.complexity() > prev.complexity() || c.boundary > prev.boundary {
                    continue;
                }
            } else if position > 0 {
                let prev = sequence[position - 1];
                if prev.complexity() > c.complexity() || prev.boundary > c.boundary {
                    continue;
                }
            }
            sequence.push(c);
            extend(components, sequence, target, out);
            sequence.pop();
        }
    }

    let mut out = Vec::new();
    for k in 1..=budget.max_thick {
        let mut sequences = Vec::new();
        extend(&components, &mut Vec::new(), 2 * k - 1, &mut sequences);
        for sequence in sequences {
            let thick = sequence.iter().step_by(2).map(|&c| Surface::from(vec![c])).collect();
            let thin = sequence
                .iter()
                .skip(1)
                .step_by(2)
                .map(|&c| Surface::from(vec![c]))
                .collect();
            let d = Decomposition::new(slope, thick, thin);
            if d.validate(false).is_ok() {
                out.push(d);
            }
        }
    }
    out
}
