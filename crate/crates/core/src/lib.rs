//! Discrete fundamental groups of finite graphs.
//!
//! The crate computes presentations of π₁² (closed walks up to the homotopy
//! moves of substitution, insertion and deletion, with 4-cycles as 2-cells)
//! and of its variant A₁ (3-cycles also filled), recognises the presented
//! groups through Tietze simplification, Smith normal form and Todd–Coxeter
//! enumeration, checks Seifert–van Kampen colimit presentations against
//! direct computation, and builds for any finite group `G` a graph whose π₁²
//! is `G`.

pub mod classifying;
pub mod error;
pub mod graph;
pub mod group;
pub mod homotopy;
pub mod identify;
pub mod label;
pub mod presentation;
pub mod snf;
pub mod svk;
pub mod tietze;
pub mod todd_coxeter;
pub mod word;

pub use classifying::{
    build_b, build_classifying_graph, build_d, build_grid22, build_xtilde, build_xtilde_with,
    check_lemma_conditions, classify, BlockGraph, BlockScheme, Budgets, Certification, Classifying,
    LemmaReport, Xtilde,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphJson};
pub use group::{FiniteGroup, GroupAction, GroupJson};
pub use homotopy::{apply_move, homotopic, Budget, HomotopyMove, MoveKind, Verdict, Walk};
pub use identify::IdentificationMap;
pub use label::Label;
pub use presentation::{pi12_presentation, walk_to_word, GraphPresentation, GroupPresentation, Mode, SpanningTree};
pub use snf::{abelianize, smith_normal_form, AbelianInvariants};
pub use svk::{
    amalgamated_presentation, check_base_set, check_cover, groupoid_colimit_group, verify_svk, Cover, CoverReport,
    SvkInput, SvkOptions, SvkReport, SvkVerdict,
};
pub use tietze::tietze_simplify;
pub use todd_coxeter::{todd_coxeter, CosetVerdict};
pub use word::{Letter, Word};
