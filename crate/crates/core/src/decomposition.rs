//! Slope-aware generalized Heegaard splittings, reduced to their
//! combinatorial shadow: an alternating sequence of thick surfaces
//! `S1, F1, S2, ..., Sk` where the `Fi` are the thin surfaces.
//!
//! No embedding data is kept. "Between `Si` and `Si+1`" is positional.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope::Slope;
use crate::surface::{Surface, SurfaceComponent};
use crate::width::Width;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Decomposition {
    pub slope: Slope,
    pub thick: Vec<Surface>,
    pub thin: Vec<Surface>,
    /// Set when the decomposition came out of an α-stabilization, i.e. it
    /// is dishonest.
    #[serde(default)]
    pub stabilized: bool,
}

/// Reasons a decomposition fails validation. Indices are 0-based; the
/// rendered messages use `S1`, `F1`, ... labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Violation {
    NoThickSurface,
    ThinCount {
        thick: usize,
        thin: usize,
    },
    ClosedSlopeWithBoundary {
        position: usize,
    },
    NoSlopedSurface,
    /// Surfaces with boundary do not form a contiguous block in the
    /// interleaved order.
    IntervalCondition {
        positions: Vec<usize>,
    },
    ComplexityMonotonicity {
        thin: usize,
        thick: usize,
        thin_complexity: u32,
        thick_complexity: u32,
    },
    BoundaryMonotonicity {
        thin: usize,
        thick: usize,
        thin_boundary: u32,
        thick_boundary: u32,
    },
    /// Strict mode: a thin surface no simpler than its neighbour.
    ThinNotSimpler {
        thin: usize,
        thick: usize,
        thin_complexity: u32,
        thick_complexity: u32,
    },
    /// Strict mode warning: sphere components of thin surfaces must be
    /// essential, which cannot be checked here.
    SphereThinComponent {
        thin: usize,
    },
}

/// Label of an interleaved position: even positions are thick, odd thin.
fn label(position: usize) -> String {
    if position.is_multiple_of(2) {
        format!("S{}", position / 2 + 1)
    } else {
        format!("F{}", position / 2 + 1)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoThickSurface => f.write_str("no thick surfaces"),
            Violation::ThinCount { thick, thin } => {
                write!(f, "{thick} thick surfaces need {} thin surfaces, found {thin}", thick.saturating_sub(1))
            }
            Violation::ClosedSlopeWithBoundary { position } => {
                write!(f, "{} has boundary but the slope is closed", label(*position))
            }
            Violation::NoSlopedSurface => f.write_str("sloped decomposition has no surface with boundary"),
            Violation::IntervalCondition { positions } => {
                let labels: Vec<_> = positions.iter().map(|&p| label(p)).collect();
                write!(f, "surfaces with boundary are not contiguous: {}", labels.join(", "))
            }
            Violation::ComplexityMonotonicity {
                thin,
                thick,
                thin_complexity,
                thick_complexity,
            } => write!(
                f,
                "c(F{}) = {thin_complexity} exceeds c(S{}) = {thick_complexity}",
                thin + 1,
                thick + 1
            ),
            Violation::BoundaryMonotonicity {
                thin,
                thick,
                thin_boundary,
                thick_boundary,
            } => write!(
                f,
                "|∂F{}| = {thin_boundary} exceeds |∂S{}| = {thick_boundary}",
                thin + 1,
                thick + 1
            ),
            Violation::ThinNotSimpler {
                thin,
                thick,
                thin_complexity,
                thick_complexity,
            } => write!(
                f,
                "c(F{}) = {thin_complexity} is not below c(S{}) = {thick_complexity}",
                thin + 1,
                thick + 1
            ),
            Violation::SphereThinComponent { thin } => {
                write!(f, "F{} has a sphere component; it must be essential", thin + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub strict: bool,
    pub violations: Vec<Violation>,
    pub strict_violations: Vec<Violation>,
    pub warnings: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.ok
    }
}

impl Decomposition {
    pub fn new(slope: Slope, thick: Vec<Surface>, thin: Vec<Surface>) -> Decomposition {
        Decomposition {
            slope,
            thick,
            thin,
            stabilized: false,
        }
    }

    /// A decomposition with one thick surface and nothing else.
    pub fn heegaard(slope: Slope, surface: Surface) -> Decomposition {
        Decomposition::new(slope, vec![surface], Vec::new())
    }

    /// Surfaces in interleaved order `S1, F1, S2, ...`.
    pub fn interleaved(&self) -> impl Iterator<Item = &Surface> + '_ {
        let mut thin = self.thin.iter();
        self.thick
            .iter()
            .flat_map(move |s| std::iter::once(s).chain(thin.next()))
    }

    pub fn validate(&self, strict: bool) -> ValidationReport {
        let mut violations = Vec::new();
        let mut strict_violations = Vec::new();
        let mut warnings = Vec::new();

        if self.thick.is_empty() {
            violations.push(Violation::NoThickSurface);
        }
        if self.thin.len() + 1 != self.thick.len() {
            violations.push(Violation::ThinCount {
                thick: self.thick.len(),
                thin: self.thin.len(),
            });
        }

        let bounded: Vec<usize> = self
            .interleaved()
            .enumerate()
            .filter(|(_, s)| s.has_boundary())
            .map(|(i, _)| i)
            .collect();
        if self.slope.is_closed() {
            violations.extend(
                bounded
                    .iter()
                    .map(|&position| Violation::ClosedSlopeWithBoundary { position }),
            );
        } else if bounded.is_empty() {
            violations.push(Violation::NoSlopedSurface);
        }
        if let (Some(&first), Some(&last)) = (bounded.first(), bounded.last()) {
            if last - first + 1 != bounded.len() {
                violations.push(Violation::IntervalCondition { positions: bounded });
            }
        }

        for (i, thin) in self.thin.iter().enumerate() {
            let (tc, tb) = (thin.complexity(), thin.total_boundary());
            for j in [i, i + 1] {
                let Some(thick) = self.thick.get(j) else {
                    continue;
                };
                let (sc, sb) = (thick.complexity(), thick.total_boundary());
                if tc > sc {
                    violations.push(Violation::ComplexityMonotonicity {
                        thin: i,
                        thick: j,
                        thin_complexity: tc,
                        thick_complexity: sc,
                    });
                }
                if tb > sb {
                    violations.push(Violation::BoundaryMonotonicity {
                        thin: i,
                        thick: j,
                        thin_boundary: tb,
                        thick_boundary: sb,
                    });
                }
                if strict && tc >= sc {
                    strict_violations.push(Violation::ThinNotSimpler {
                        thin: i,
                        thick: j,
                        thin_complexity: tc,
                        thick_complexity: sc,
                    });
                }
            }
            if strict && thin.has_sphere() {
                warnings.push(Violation::SphereThinComponent { thin: i });
            }
        }

        let ok = violations.is_empty() && strict_violations.is_empty();
        ValidationReport {
            ok,
            strict,
            violations,
            strict_violations,
            warnings,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate(false).is_ok()
    }

    fn ensure_valid(&self) -> Result<()> {
        let report = self.validate(false);
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidDecomposition(report.violations))
        }
    }

    /// Thick complexities without checking validity.
    pub fn thick_complexities(&self) -> Width {
        Width::new(self.thick.iter().map(Surface::complexity))
    }

    /// The multiset of thick-surface complexities.
    pub fn width(&self) -> Result<Width> {
        self.ensure_valid()?;
        Ok(self.thick_complexities())
    }

    /// Reverses the order of the surfaces.
    pub fn reversed(&self) -> Decomposition {
        Decomposition {
            slope: self.slope,
            thick: self.thick.iter().rev().cloned().collect(),
            thin: self.thin.iter().rev().cloned().collect(),
            stabilized: self.stabilized,
        }
    }

    /// α-stabilizes thick surface `index` (0-based): its component of
    /// largest genus gains two boundary circles of slope `alpha`, raising
    /// its complexity by 2.
    ///
    /// On a closed decomposition any thick surface may be chosen (the order
    /// can be reversed so the boundary torus sits next to it). On a sloped
    /// one `alpha` must match the existing slope and the result must keep
    /// the boundary-carrying surfaces contiguous.
    pub fn alpha_stabilize(&self, alpha: Slope, index: usize) -> Result<Decomposition> {
        if alpha.is_closed() {
            return Err(Error::StabilizeClosed);
        }
        self.ensure_valid()?;
        if !self.slope.is_closed() && alpha != self.slope {
            return Err(Error::SlopeMismatch {
                alpha: alpha.to_string(),
                slope: self.slope.to_string(),
            });
        }
        let surface = self.thick.get(index).ok_or(Error::ThickIndex {
            index,
            len: self.thick.len(),
        })?;
        // components are sorted, so the last one has the largest genus
        let target = match surface.components().last() {
            Some(c) if !c.is_sphere() => *c,
            _ => return Err(Error::SphereStabilization(index)),
        };
        let stabilized = surface.with_component(
            surface.len() - 1,
            SurfaceComponent::new(target.genus, target.boundary + 2),
        );
        let mut thick = self.thick.clone();
        thick[index] = stabilized;
        let result = Decomposition {
            slope: alpha,
            thick,
            thin: self.thin.clone(),
            stabilized: true,
        };
        result.ensure_valid()?;
        Ok(result)
    }

    /// Tubes every surface along the boundary torus, pairing boundary
    /// circles within each component: `(g, p) -> (g + p/2, 0)`.
    pub fn tube_to_closed(&self) -> Result<Decomposition> {
        if self.slope.is_closed() {
            return Err(Error::AlreadyClosed);
        }
        self.ensure_valid()?;
        let tube = |surface: &Surface| -> Result<Surface> {
            surface
                .components()
                .iter()
                .map(|c| {
                    if c.boundary % 2 == 1 {
                        Err(Error::OddBoundary {
                            genus: c.genus,
                            boundary: c.boundary,
                        })
                    } else {
                        Ok(SurfaceComponent::new(c.genus + c.boundary / 2, 0))
                    }
                })
                .collect()
        };
        Ok(Decomposition {
            slope: Slope::Closed,
            thick: self.thick.iter().map(tube).collect::<Result<_>>()?,
            thin: self.thin.iter().map(tube).collect::<Result<_>>()?,
            stabilized: self.stabilized,
        })
    }

    /// The induced decomposition of the Dehn filling: every surface is
    /// capped off. Closed decompositions are returned unchanged.
    pub fn fill(&self) -> Decomposition {
        if self.slope.is_closed() {
            return self.clone();
        }
        Decomposition {
            slope: Slope::Closed,
            thick: self.thick.iter().map(Surface::cap_off).collect(),
            thin: self.thin.iter().map(Surface::cap_off).collect(),
            stabilized: self.stabilized,
        }
    }

    /// A single thick surface all of whose components are planar.
    pub fn is_planar_heegaard(&self) -> bool {
        self.thick.len() == 1 && self.thin.is_empty() && self.thick[0].is_planar()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }

    pub fn from_json(text: &str) -> Result<Decomposition> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }
}
