//! Surfaces as multisets of `(genus, boundary)` components.
//!
//! Components are anonymous: the model does not know which boundary circles
//! sit next to each other on the boundary torus, only how many there are.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A connected orientable surface of genus `genus` with `boundary` boundary
/// circles. Serialized as `{"g": .., "b": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceComponent {
    #[serde(rename = "g")]
    pub genus: u32,
    #[serde(rename = "b")]
    pub boundary: u32,
}

impl SurfaceComponent {
    pub const SPHERE: SurfaceComponent = SurfaceComponent::new(0, 0);

    pub const fn new(genus: u32, boundary: u32) -> SurfaceComponent {
        SurfaceComponent { genus, boundary }
    }

    pub fn is_sphere(&self) -> bool {
        *self == SurfaceComponent::SPHERE
    }

    /// `χ = 2 - 2g - p`.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.boundary)
    }

    /// `1 - χ + g = 3g + p - 1`, except that the sphere has complexity 0.
    pub fn complexity(&self) -> u32 {
        if self.is_sphere() {
            0
        } else {
            3 * self.genus + self.boundary - 1
        }
    }
}

impl fmt::Display for SurfaceComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.genus, self.boundary)
    }
}

/// A possibly disconnected surface. Components are kept sorted so that
/// equality is multiset equality; selectors index that sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<SurfaceComponent>", into = "Vec<SurfaceComponent>")]
pub struct Surface {
    components: Vec<SurfaceComponent>,
}

impl Surface {
    pub fn new(components: impl IntoIterator<Item = SurfaceComponent>) -> Surface {
        let mut components: Vec<_> = components.into_iter().collect();
        components.sort_unstable();
        Surface { components }
    }

    pub fn empty() -> Surface {
        Surface::default()
    }

    pub fn connected(genus: u32, boundary: u32) -> Surface {
        Surface {
            components: vec![SurfaceComponent::new(genus, boundary)],
        }
    }

    pub fn components(&self) -> &[SurfaceComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn total_boundary(&self) -> u32 {
        self.components.iter().map(|c| c.boundary).sum()
    }

    pub fn has_boundary(&self) -> bool {
        self.total_boundary() > 0
    }

    pub fn is_planar(&self) -> bool {
        self.components.iter().all(|c| c.genus == 0)
    }

    pub fn has_sphere(&self) -> bool {
        self.components.iter().any(SurfaceComponent::is_sphere)
    }

    /// Sum of component complexities; the empty surface has complexity 0.
    pub fn complexity(&self) -> u32 {
        self.components.iter().map(SurfaceComponent::complexity).sum()
    }

    fn component(&self, index: usize) -> Result<SurfaceComponent> {
        self.components
            .get(index)
            .copied()
            .ok_or(Error::ComponentIndex {
                index,
                len: self.components.len(),
            })
    }

    /// Replaces the component at `index` and restores the sorted order.
    pub(crate) fn with_component(&self, index: usize, replacement: SurfaceComponent) -> Surface {
        let mut components = self.components.clone();
        components[index] = replacement;
        Surface::new(components)
    }

    /// Tubes two boundary circles of one component together along an
    /// annulus in the boundary torus: `(g, p) -> (g + 1, p - 2)`.
    pub fn tube_same_component(&self, index: usize) -> Result<Surface> {
        let c = self.component(index)?;
        if c.boundary < 2 {
            return Err(Error::NotEnoughBoundary {
                genus: c.genus,
                boundary: c.boundary,
                needed: 2,
            });
        }
        Ok(self.with_component(
            index,
            SurfaceComponent::new(c.genus + 1, c.boundary - 2),
        ))
    }

    /// Tubes a boundary circle of one component to a boundary circle of
    /// another: `(g1, p1), (g2, p2) -> (g1 + g2, p1 + p2 - 2)`.
    pub fn tube_merge(&self, index_a: usize, index_b: usize) -> Result<Surface> {
        if index_a == index_b {
            return Err(Error::SameComponent(index_a));
        }
        let a = self.component(index_a)?;
        let b = self.component(index_b)?;
        for c in [a, b] {
            if c.boundary == 0 {
                return Err(Error::NotEnoughBoundary {
                    genus: c.genus,
                    boundary: c.boundary,
                    needed: 1,
                });
            }
        }
        let merged = SurfaceComponent::new(a.genus + b.genus, a.boundary + b.boundary - 2);
        let components = self
            .components
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index_a && i != index_b)
            .map(|(_, c)| *c)
            .chain(std::iter::once(merged));
        Ok(Surface::new(components))
    }

    /// Caps every boundary circle with a disk; genus is unchanged.
    pub fn cap_off(&self) -> Surface {
        Surface::new(
            self.components
                .iter()
                .map(|c| SurfaceComponent::new(c.genus, 0)),
        )
    }
}

impl From<Vec<SurfaceComponent>> for Surface {
    fn from(components: Vec<SurfaceComponent>) -> Surface {
        Surface::new(components)
    }
}

impl From<Surface> for Vec<SurfaceComponent> {
    fn from(surface: Surface) -> Vec<SurfaceComponent> {
        surface.components
    }
}

impl FromIterator<SurfaceComponent> for Surface {
    fn from_iter<I: IntoIterator<Item = SurfaceComponent>>(iter: I) -> Surface {
        Surface::new(iter)
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}
