//! Knot and link diagrams: planar maps, PD codes, Schubert diagrams of
//! two-bridge links, and rational-tangle closures.

pub mod map;
mod pd;
pub mod schubert;
pub mod tangle;

pub use map::{PlanarMap, Slot};
pub use pd::PlanarDiagram;
pub use schubert::{
    extended_wedge_site, modify, schubert_diagram, wedge_site, Modification, SchubertDiagram, WedgeSite, CALIBRATED_CROSSING,
    CALIBRATION_ID,
};

/// Number of components of a diagram.
pub fn component_count(diagram: &PlanarDiagram) -> usize {
    diagram.component_count()
}
