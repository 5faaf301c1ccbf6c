//! Verification toolkit for fixed-point theory on finite digital images.
//!
//! A digital image is a finite set of lattice points together with a
//! `c_u` adjacency, viewed as a graph. This crate builds such images,
//! equips them with exact metrics, classifies self-maps against the
//! standard contraction notions (Banach, Kannan, Reich and friends),
//! runs the corrected fixed-point iteration procedures, measures
//! collapse complexity by exhaustive enumeration, and machine-checks a
//! suite of counterexamples and triviality results around these notions.
//!
//! Start with the runnable programs under `examples/`; the `digifix`
//! binary exposes the same operations as subcommands.

pub mod classify;
pub mod cli;
pub mod complexity;
pub mod error;
pub mod formats;
pub mod image;
pub mod metric;
pub mod pairs;
pub mod scenarios;
pub mod selfmap;

mod lp3;

pub use error::{Error, Result};
pub use image::{cu_adjacent, AdjacencySpec, DigitalImage, Point};
pub use metric::{
    diameter, distance, is_uniformly_connected, uniform_discreteness_witness, DistanceValue,
    Metric,
};
pub use selfmap::{SelfMap, SequenceWindow};
