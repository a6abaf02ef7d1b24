//! Text formats, drawings and reports.

mod dot;
mod layout;
mod planar;
mod report;
mod svg;

pub use dot::export_dot;
pub use layout::{ring_layout, tutte_layout, Layout, LayoutMethod};
pub use planar::{parse, serialize};
pub use report::Report;
pub use svg::{export_svg, SvgOptions};
