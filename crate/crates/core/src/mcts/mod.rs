//! UCT search with pluggable enhancements.
//!
//! Each iteration descends the tree with [`select_child`], expands one new
//! child in move order, plays it out with the configured policy and
//! backpropagates utilities plus enhancement statistics. Trees survive
//! between turns through [`SearchTree::advance`].

mod config;
mod search;
mod tree;

pub use config::{SearchConfig, SearchError};
pub use search::{
    backpropagate, build_snapshot, final_move_choice, playout, search, select_child, SearchOutput, SearchResult,
};
pub use tree::{NodeId, SearchNode, SearchTree, ROOT};

use crate::enhancements::EnhancementTables;
use crate::game::{GameState, MoveId};

/// A search player that keeps its tree, tables and previous score across
/// the turns of one game.
#[derive(Debug, Clone)]
pub struct Engine<S: GameState> {
    cfg: SearchConfig,
    tables: EnhancementTables,
    tree: Option<SearchTree<S>>,
    previous_score: Option<f64>,
}

impl<S: GameState> Engine<S> {
    pub fn new(cfg: SearchConfig) -> Self {
        Engine {
            cfg,
            tables: EnhancementTables::default(),
            tree: None,
            previous_score: None,
        }
    }

    pub fn config(&self) -> &SearchConfig {
        &self.cfg
    }

    pub fn config_mut(&mut self) -> &mut SearchConfig {
        &mut self.cfg
    }

    pub fn tables(&self) -> &EnhancementTables {
        &self.tables
    }

    pub fn tree(&self) -> Option<&SearchTree<S>> {
        self.tree.as_ref()
    }

    pub fn previous_score(&self) -> Option<f64> {
        self.previous_score
    }

    /// Searches `state` and remembers the selected move's score for the
    /// next turn's snapshot.
    pub fn think(&mut self, state: &S) -> Result<SearchResult, SearchError> {
        let reused = self.tree.take().filter(|_| self.cfg.tree_reuse);
        let out = search(state, &self.cfg, &mut self.tables, reused)?;
        let mut result = out.result;
        result.snapshot.previous_turn_score = self.previous_score;
        self.previous_score = Some(result.snapshot.selected().score);
        self.tree = Some(out.tree);
        Ok(result)
    }

    /// Searches `state` on copies of the tables with a fresh tree, leaving
    /// the engine untouched. `iterations` overrides the iteration budget.
    pub fn analyze(&self, state: &S, iterations: Option<u64>) -> Result<SearchResult, SearchError> {
        let mut tables = self.tables.clone();
        let mut cfg = self.cfg.clone();
        if iterations.is_some() {
            cfg.iterations = iterations;
        }
        let mut result = search(state, &cfg, &mut tables, None)?.result;
        result.snapshot.previous_turn_score = self.previous_score;
        Ok(result)
    }

    /// Follows a move played on the board by either side.
    pub fn observe(&mut self, mv: MoveId) {
        self.tree = self.tree.take().and_then(|t| t.advance(mv));
    }
}
