//! Classification of right-angled Coxeter groups from their defining graphs,
//! with emphasis on graphs whose flag complex embeds in the 2-sphere.

pub mod graph;

pub use graph::{FourCycle, GraphError, SimplicialGraph, VertexSet};
pub mod planar;

pub use planar::{flag_planar_complex, PlanarComplex, PlanarError, Region};
pub mod classify;
pub mod decomp;
pub use decomp::{prime_decomposition_tree, visual_decomposition_tree, Color, DecompError, PrimeTree, VisualDecompositionTree};
pub mod bisim;
pub use bisim::{bisimilar, minimal_quotient, BisimError, TwoColoredGraph};
pub mod relhyp;
pub use relhyp::{divergence_class, minimal_peripheral_structure, planar_peripheral_structure, verify_caprace, DivergenceClass, PeripheralCollection, RelhypError};
pub mod boundary;
pub use boundary::{is_one_ended, nonparabolic_cut_pair, parabolic_cut_points, peripheral_splitting, sierpinski_carpet, splits_over_2ended, BoundaryError, TriState};
pub mod fixtures;
pub mod io;
pub use io::{parse_input, Format, ParseError};
pub mod cli;
pub use cli::run;
