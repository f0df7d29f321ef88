//! Search engine, enhancements and explanation layer for knowledge-free
//! game playing.

pub mod batch;
pub mod enhancements;
pub mod explain;
pub mod game;
pub mod mcts;
