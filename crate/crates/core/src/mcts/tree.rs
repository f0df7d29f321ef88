use crate::enhancements::{AmafStats, PnStats, Score, ScoreBounds};
use crate::game::{GameOutcome, GameState, MoveId, MoveRecord, Player};

pub type NodeId = usize;

pub const ROOT: NodeId = 0;

/// One node of the search tree. Children are created lazily in the order of
/// the node's legal moves, so `children[i]` always belongs to `moves[i]`.
#[derive(Debug, Clone)]
pub struct SearchNode {
    pub mv: Option<MoveId>,
    pub parent: Option<NodeId>,
    /// Player to move at this node.
    pub mover: Player,
    pub visits: u64,
    /// Accumulated terminal utilities, one per player.
    pub reward: [f64; 2],
    /// Iterations whose evaluation started here (playout, terminal or solved hit).
    pub evaluations: u64,
    pub terminal: Option<GameOutcome>,
    pub bounds: ScoreBounds,
    /// Plies to the end of a proven draw.
    pub draw_distance: u32,
    pub amaf: AmafStats,
    pub pn: PnStats,
    moves: Vec<MoveId>,
    children: Vec<NodeId>,
}

impl SearchNode {
    fn new<S: GameState>(state: &S, mv: Option<MoveId>, parent: Option<NodeId>) -> Self {
        let terminal = state.outcome();
        let bounds = match &terminal {
            Some(o) => ScoreBounds::exact(Score::terminal(o, state.to_move())),
            None => ScoreBounds::OPEN,
        };
        SearchNode {
            mv,
            parent,
            mover: state.to_move(),
            visits: 0,
            reward: [0.0; 2],
            evaluations: 0,
            terminal,
            bounds,
            draw_distance: 0,
            amaf: AmafStats::default(),
            pn: PnStats::LEAF,
            moves: state.ordered_move_ids(),
            children: Vec::new(),
        }
    }

    /// Mean reward for `player`; 0 before the first visit.
    pub fn mean(&self, player: Player) -> f64 {
        if self.visits == 0 {
            0.0
        } else {
            self.reward[player.index()] / self.visits as f64
        }
    }

    /// Legal moves of the node's state, sorted by notation.
    pub fn moves(&self) -> &[MoveId] {
        &self.moves
    }

    pub fn children(&self) -> &[NodeId] {
        &self.children
    }

    pub fn untried(&self) -> usize {
        self.moves.len() - self.children.len()
    }

    pub fn is_fully_expanded(&self) -> bool {
        self.children.len() == self.moves.len()
    }
}

/// Arena-allocated search tree rooted at a game state.
#[derive(Debug, Clone)]
pub struct SearchTree<S: GameState> {
    nodes: Vec<SearchNode>,
    root_state: S,
    pn_player: Player,
}

impl<S: GameState> SearchTree<S> {
    pub fn new(root_state: S) -> Self {
        let root = SearchNode::new(&root_state, None, None);
        SearchTree {
            pn_player: root.mover,
            nodes: vec![root],
            root_state,
        }
    }

    pub fn root_state(&self) -> &S {
        &self.root_state
    }

    pub fn root(&self) -> &SearchNode {
        &self.nodes[ROOT]
    }

    pub fn node(&self, id: NodeId) -> &SearchNode {
        &self.nodes[id]
    }

    pub fn node_mut(&mut self, id: NodeId) -> &mut SearchNode {
        &mut self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &SearchNode)> {
        self.nodes.iter().enumerate()
    }

    pub fn child_for_move(&self, id: NodeId, mv: MoveId) -> Option<NodeId> {
        let node = &self.nodes[id];
        let i = node.moves.iter().position(|&m| m == mv)?;
        node.children.get(i).copied()
    }

    /// State at `id`, replayed from the root.
    pub fn state_of(&self, id: NodeId) -> S {
        let mut line = Vec::new();
        let mut cur = id;
        while let Some(p) = self.nodes[cur].parent {
            line.push(self.nodes[cur].mv.expect("non-root node has a move"));
            cur = p;
        }
        let mut state = self.root_state.clone();
        for &mv in line.iter().rev() {
            state.play(mv);
        }
        state
    }

    /// Materializes the next untried child of `id`.
    pub fn expand(&mut self, id: NodeId) -> Option<NodeId> {
        let state = self.state_of(id);
        self.expand_with(id, state)
    }

    /// Like [`expand`](Self::expand) with the parent's state already at hand;
    /// `state` is advanced by the expanded move.
    pub(crate) fn expand_with(&mut self, id: NodeId, mut state: S) -> Option<NodeId> {
        let node = &self.nodes[id];
        let mv = *node.moves.get(node.children.len())?;
        state.play(mv);
        let child = self.nodes.len();
        let mut fresh = SearchNode::new(&state, Some(mv), Some(id));
        fresh.pn = self.pn_leaf(&fresh);
        self.nodes.push(fresh);
        self.nodes[id].children.push(child);
        Some(child)
    }

    pub(crate) fn pn_player(&self) -> Player {
        self.pn_player
    }

    /// Recomputes the bounds of an internal node from its children.
    pub(crate) fn refresh_bounds(&mut self, id: NodeId) {
        let node = &self.nodes[id];
        if node.terminal.is_some() {
            return;
        }
        let kids = node.children.iter().map(|&c| self.nodes[c].bounds);
        let bounds = ScoreBounds::from_children(kids, !node.is_fully_expanded());
        let draw_distance = if bounds.solved() == Some(Score::DRAW) {
            1 + node
                .children
                .iter()
                .map(|&c| &self.nodes[c])
                .filter(|c| c.bounds.solved() == Some(Score::DRAW))
                .map(|c| c.draw_distance)
                .max()
                .unwrap_or(0)
        } else {
            0
        };
        let node = &mut self.nodes[id];
        node.bounds = bounds;
        node.draw_distance = draw_distance;
    }

    /// Proof numbers implied by a node's own status, before looking at children.
    fn pn_leaf(&self, node: &SearchNode) -> PnStats {
        let me = node.mover == self.pn_player;
        if let Some(o) = &node.terminal {
            return if o.winner() == Some(self.pn_player) {
                PnStats::PROVED
            } else {
                PnStats::DISPROVED
            };
        }
        let b = node.bounds;
        let (wins, cannot_win) = if me {
            (b.pess.is_win(), !b.opt.is_win())
        } else {
            (b.opt.is_loss(), !b.pess.is_loss())
        };
        if wins {
            PnStats::PROVED
        } else if cannot_win {
            PnStats::DISPROVED
        } else {
            PnStats::LEAF
        }
    }

    pub(crate) fn refresh_pn(&mut self, id: NodeId) {
        let node = &self.nodes[id];
        let own = self.pn_leaf(node);
        let pn = if own != PnStats::LEAF || node.children.is_empty() {
            own
        } else {
            PnStats::combine(
                node.mover == self.pn_player,
                node.children.iter().map(|&c| self.nodes[c].pn),
                node.untried(),
            )
        };
        self.nodes[id].pn = pn;
    }

    /// Recomputes every node's proof numbers for the given objective player.
    pub(crate) fn reset_pn(&mut self, player: Player) {
        self.pn_player = player;
        for id in (0..self.nodes.len()).rev() {
            self.refresh_pn(id);
        }
    }

    /// The subtree below `mv` as a new tree, statistics intact, or `None`
    /// if that move was never expanded.
    pub fn advance(self, mv: MoveId) -> Option<SearchTree<S>> {
        let child = self.child_for_move(ROOT, mv)?;
        let mut root_state = self.root_state;
        root_state.play(mv);
        let mut order = vec![child];
        let mut new_id = vec![usize::MAX; self.nodes.len()];
        new_id[child] = 0;
        let mut i = 0;
        while i < order.len() {
            for &c in &self.nodes[order[i]].children {
                new_id[c] = order.len();
                order.push(c);
            }
            i += 1;
        }
        let mut old: Vec<Option<SearchNode>> = self.nodes.into_iter().map(Some).collect();
        let nodes = order
            .iter()
            .map(|&o| {
                let mut n = old[o].take().expect("each node moved once");
                n.parent = n.parent.filter(|_| o != child).map(|p| new_id[p]);
                n.children.iter_mut().for_each(|c| *c = new_id[*c]);
                if o == child {
                    n.mv = None;
                }
                n
            })
            .collect();
        Some(SearchTree {
            nodes,
            root_state,
            pn_player: self.pn_player,
        })
    }

    /// Principal variation from the root; see [`SearchTree::line_from`].
    pub fn principal_variation(&self, max_plies: usize, use_solver: bool) -> Vec<MoveRecord> {
        self.line_from(ROOT, self.root_state.clone(), max_plies, use_solver)
    }

    /// Most probable continuation from `id` (whose state is `state`).
    ///
    /// In solved nodes the line follows a child realizing the proven value
    /// and, for proven wins and losses, runs exactly to the end of the game.
    /// Otherwise it follows the most visited child for at most `max_plies`.
    pub fn line_from(&self, id: NodeId, mut state: S, max_plies: usize, use_solver: bool) -> Vec<MoveRecord> {
        let start = &self.nodes[id];
        let cap = match start.bounds.solved().and_then(Score::distance) {
            Some(d) if use_solver => d as usize,
            _ => max_plies,
        };
        let mut line = Vec::new();
        let mut cur = id;
        while line.len() < cap {
            let node = &self.nodes[cur];
            let Some(next) = self.line_child(node, use_solver) else {
                break;
            };
            let mv = self.nodes[next].mv.expect("child has a move");
            line.push(MoveRecord {
                id: mv,
                notation: state.notation(mv),
            });
            state.play(mv);
            cur = next;
        }
        line
    }

    fn line_child(&self, node: &SearchNode, use_solver: bool) -> Option<NodeId> {
        let solved = node.bounds.solved().filter(|_| use_solver);
        let mut best: Option<(NodeId, u64)> = None;
        for &c in &node.children {
            let child = &self.nodes[c];
            let eligible = match solved {
                Some(v) => child.bounds.for_parent().pess == v,
                None => child.visits > 0,
            };
            if eligible && best.is_none_or(|(_, v)| child.visits > v) {
                best = Some((c, child.visits));
            }
        }
        best.map(|(c, _)| c)
    }
}
