use std::sync::atomic::Ordering;
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{SearchConfig, SearchError};
use super::tree::{NodeId, SearchNode, SearchTree, ROOT};
use crate::enhancements::{grave_value, mast_policy, nst_policy, EnhancementTables, Score};
use crate::explain::AmafSummary;
use crate::explain::{MoveStats, NGramSummary, Rationale, SolvedInfo, TurnSnapshot};
use crate::game::{GameOutcome, GameState, MoveId, MoveRecord, Player};

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub selected: MoveRecord,
    pub iterations: u64,
    pub rationale: Rationale,
    pub snapshot: TurnSnapshot,
}

#[derive(Debug, Clone)]
pub struct SearchOutput<S: GameState> {
    pub result: SearchResult,
    pub tree: SearchTree<S>,
}

/// UCT child selection at `node` from the perspective of its mover.
///
/// Unvisited children come first, in move order. With the solver on, solved
/// children and children that cannot beat the node's guaranteed value are
/// skipped. With GRAVE on, the exploitation term blends in the AMAF mean
/// stored at `reference`.
pub fn select_child<S: GameState>(
    tree: &SearchTree<S>,
    node: NodeId,
    reference: NodeId,
    cfg: &SearchConfig,
) -> Option<NodeId> {
    let n = tree.node(node);
    let me = n.mover;
    let prune = |c: &SearchNode| {
        cfg.enhancements.solver && (c.bounds.is_solved() || c.bounds.for_parent().opt <= n.bounds.pess)
    };
    let open: Vec<NodeId> = n.children().iter().copied().filter(|&c| !prune(tree.node(c))).collect();
    let candidates = if open.is_empty() { n.children() } else { &open[..] };
    if let Some(&c) = candidates.iter().find(|&&c| tree.node(c).visits == 0) {
        return Some(c);
    }
    let ln_n = (n.visits.max(1) as f64).ln();
    let amaf = cfg.enhancements.grave.then(|| &tree.node(reference).amaf);
    let mut best = None;
    let mut best_value = f64::NEG_INFINITY;
    for &c in candidates {
        let child = tree.node(c);
        let mean = child.mean(me);
        let exploit = match (amaf, child.mv) {
            (Some(table), Some(mv)) => grave_value(mean, child.visits, table.get(me, mv), cfg.params.grave_bias),
            _ => mean,
        };
        let value = exploit + cfg.exploration * (ln_n / child.visits as f64).sqrt();
        if value > best_value {
            best_value = value;
            best = Some(c);
        }
    }
    best
}

/// Plays `state` to the end with the configured playout policy, appending
/// every `(player, move)` to `trace`. Hitting the ply cap scores a draw.
pub(crate) fn run_playout<S: GameState, R: Rng>(
    state: &mut S,
    cfg: &SearchConfig,
    tables: &EnhancementTables,
    rng: &mut R,
    trace: &mut Vec<(Player, MoveId)>,
    buf: &mut Vec<MoveId>,
) -> GameOutcome {
    let cap = state.playout_ply_cap();
    let flags = &cfg.enhancements;
    let p = &cfg.params;
    for _ in 0..cap {
        if let Some(o) = state.outcome() {
            return o;
        }
        state.legal_move_ids(buf);
        let player = state.to_move();
        let mv = if flags.nst {
            let recent = state.recent_moves();
            let history: Vec<MoveId> = recent.iter().flatten().copied().collect();
            nst_policy(
                &tables.nst,
                player,
                &history,
                buf,
                p.nst_threshold,
                p.nst_epsilon,
                p.nst_max_length,
                rng,
            )
        } else if flags.mast {
            mast_policy(&tables.mast, player, buf, p.mast_temperature, rng)
        } else {
            *buf.choose(rng).expect("non-terminal state has moves")
        };
        state.play(mv);
        trace.push((player, mv));
    }
    state.outcome().unwrap_or_else(GameOutcome::draw)
}

/// One playout from `state`: terminal utilities and the full move trace.
pub fn playout<S: GameState, R: Rng>(
    state: &S,
    cfg: &SearchConfig,
    tables: &EnhancementTables,
    rng: &mut R,
) -> (GameOutcome, Vec<(Player, MoveId)>) {
    let mut state = state.clone();
    let mut trace = Vec::new();
    let outcome = run_playout(&mut state, cfg, tables, rng, &mut trace, &mut Vec::new());
    (outcome, trace)
}

/// Outcome implied by a solved node's proven value.
fn solved_outcome(node: &SearchNode) -> GameOutcome {
    let s = node.bounds.pess;
    if s.is_win() {
        GameOutcome::win(node.mover)
    } else if s.is_loss() {
        GameOutcome::win(node.mover.opponent())
    } else {
        GameOutcome::draw()
    }
}

/// Updates the tree and tables after one iteration.
///
/// `path` runs from the root to the node where evaluation started and
/// `trace` holds the tree moves followed by the playout moves.
pub fn backpropagate<S: GameState>(
    tree: &mut SearchTree<S>,
    path: &[NodeId],
    outcome: &GameOutcome,
    trace: &[(Player, MoveId)],
    tables: &mut EnhancementTables,
    cfg: &SearchConfig,
) {
    let flags = &cfg.enhancements;
    for &id in path {
        let node = tree.node_mut(id);
        node.visits += 1;
        node.reward[0] += outcome.utilities[0];
        node.reward[1] += outcome.utilities[1];
    }
    let leaf = *path.last().expect("path starts at the root");
    tree.node_mut(leaf).evaluations += 1;
    if flags.tracks_bounds() {
        for &id in path.iter().rev() {
            tree.refresh_bounds(id);
        }
    }
    if flags.pn {
        for &id in path.iter().rev() {
            tree.refresh_pn(id);
        }
    }
    if flags.grave {
        update_amaf(tree, path, trace, outcome);
    }
    let context: Vec<MoveId> = tree.root_state().recent_moves().iter().flatten().copied().collect();
    tables.update(flags, &cfg.params, &context, trace, outcome);
}

/// Credits each path node with every distinct (player, move) played at or
/// below it during the iteration.
fn update_amaf<S: GameState>(
    tree: &mut SearchTree<S>,
    path: &[NodeId],
    trace: &[(Player, MoveId)],
    outcome: &GameOutcome,
) {
    let space = tree.root_state().move_id_space();
    let mut seen = vec![false; 2 * space];
    let mut distinct: Vec<(Player, MoveId)> = Vec::new();
    let mut next = trace.len();
    for (depth, &id) in path.iter().enumerate().rev() {
        while next > depth {
            next -= 1;
            let (p, m) = trace[next];
            let k = p.index() * space + m as usize;
            if !seen[k] {
                seen[k] = true;
                distinct.push((p, m));
            }
        }
        let node = tree.node_mut(id);
        for &(p, m) in &distinct {
            node.amaf.record(p, m, outcome.utility(p));
        }
    }
}

/// Final move: the fastest proven win; otherwise the most visited child
/// (ties by mean, then move order), avoiding proven losses unless nothing
/// else is left, in which case the slowest loss is chosen.
pub fn final_move_choice<S: GameState>(
    tree: &SearchTree<S>,
    use_solver: bool,
) -> Result<(NodeId, Rationale), SearchError> {
    let root = tree.root();
    let me = root.mover;
    let kids = root.children();
    if kids.iter().all(|&c| tree.node(c).visits == 0) {
        return Err(SearchError::NoVisitedChildren);
    }
    let robust = |pool: &mut dyn Iterator<Item = NodeId>| {
        let mut best: Option<NodeId> = None;
        for c in pool {
            let n = tree.node(c);
            let better = match best.map(|b| tree.node(b)) {
                None => true,
                Some(b) => n.visits > b.visits || (n.visits == b.visits && n.mean(me) > b.mean(me)),
            };
            if better {
                best = Some(c);
            }
        }
        best
    };
    if use_solver {
        let view = |c: NodeId| tree.node(c).bounds.for_parent();
        let best_proven = |pred: &dyn Fn(Score) -> bool| {
            kids.iter()
                .copied()
                .filter(|&c| view(c).solved().is_some_and(pred))
                .fold(None, |acc: Option<NodeId>, c| match acc {
                    Some(a) if view(a).pess >= view(c).pess => Some(a),
                    _ => Some(c),
                })
        };
        if let Some(c) = best_proven(&|s| s.is_win()) {
            return Ok((c, Rationale::Proven));
        }
        if let Some(value) = root.bounds.solved() {
            let mut realizing = kids.iter().copied().filter(|&c| view(c).pess == value);
            if let Some(c) = robust(&mut realizing) {
                return Ok((c, Rationale::Proven));
            }
        }
        let mut alive = kids
            .iter()
            .copied()
            .filter(|&c| tree.node(c).visits > 0 && !view(c).solved().is_some_and(Score::is_loss));
        if let Some(c) = robust(&mut alive) {
            return Ok((c, Rationale::Robust));
        }
        let c = best_proven(&|s| s.is_loss()).expect("all visited children are proven losses");
        return Ok((c, Rationale::Proven));
    }
    let mut visited = kids.iter().copied().filter(|&c| tree.node(c).visits > 0);
    Ok((robust(&mut visited).expect("checked above"), Rationale::Robust))
}

fn rng_for(cfg: &SearchConfig, move_counter: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ (move_counter as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs MCTS from `state` until the budget is spent or the root is solved.
///
/// `reused` is used only if its root state equals `state`. The returned
/// snapshot has no previous-turn score; callers that track one fill it in.
pub fn search<S: GameState>(
    state: &S,
    cfg: &SearchConfig,
    tables: &mut EnhancementTables,
    reused: Option<SearchTree<S>>,
) -> Result<SearchOutput<S>, SearchError> {
    cfg.validate()?;
    if state.is_terminal() {
        return Err(SearchError::TerminalState);
    }
    let mut tree = reused
        .filter(|t| t.root_state() == state)
        .unwrap_or_else(|| SearchTree::new(state.clone()));
    let flags = cfg.enhancements;
    if flags.pn && tree.pn_player() != state.to_move() {
        tree.reset_pn(state.to_move());
    }
    let mut rng = rng_for(cfg, state.move_counter());
    let deadline = cfg.time_ms.map(|ms| Instant::now() + Duration::from_millis(ms));
    let budget = cfg.iterations.unwrap_or(u64::MAX);
    let mut path = Vec::new();
    let mut trace = Vec::new();
    let mut buf = Vec::new();
    let mut iterations = 0;
    while iterations < budget {
        if flags.solver && tree.root().bounds.is_solved() {
            break;
        }
        // Budgets and the stop flag allow at least one iteration so that
        // there is always a move to return.
        if iterations > 0 && deadline.is_some_and(|d| Instant::now() >= d) {
            break;
        }
        if iterations > 0 && cfg.stop.as_ref().is_some_and(|s| s.load(Ordering::Relaxed)) {
            break;
        }
        iterate(&mut tree, cfg, tables, &mut rng, &mut path, &mut trace, &mut buf);
        iterations += 1;
    }
    let (chosen, rationale) = final_move_choice(&tree, flags.solver)?;
    let snapshot = build_snapshot(&tree, tables, cfg, iterations, chosen, rationale);
    let mv = tree.node(chosen).mv.expect("child has a move");
    let selected = MoveRecord {
        id: mv,
        notation: state.notation(mv),
    };
    Ok(SearchOutput {
        result: SearchResult {
            selected,
            iterations,
            rationale,
            snapshot,
        },
        tree,
    })
}

fn iterate<S: GameState, R: Rng>(
    tree: &mut SearchTree<S>,
    cfg: &SearchConfig,
    tables: &mut EnhancementTables,
    rng: &mut R,
    path: &mut Vec<NodeId>,
    trace: &mut Vec<(Player, MoveId)>,
    buf: &mut Vec<MoveId>,
) {
    let solver = cfg.enhancements.solver;
    let ref_visits = cfg.params.grave_ref_visits;
    path.clear();
    trace.clear();
    path.push(ROOT);
    let mut state = tree.root_state().clone();
    let mut id = ROOT;
    let mut reference = ROOT;
    let outcome = loop {
        let node = tree.node(id);
        if let Some(o) = node.terminal {
            break o;
        }
        if solver && node.bounds.is_solved() {
            break solved_outcome(node);
        }
        if node.visits >= ref_visits {
            reference = id;
        }
        let mover = node.mover;
        if !node.is_fully_expanded() {
            let mv = node.moves()[node.children().len()];
            trace.push((mover, mv));
            let child = tree.expand_with(id, state.clone()).expect("untried move exists");
            state.play(mv);
            path.push(child);
            match tree.node(child).terminal {
                Some(o) => break o,
                None => break run_playout(&mut state, cfg, tables, rng, trace, buf),
            }
        }
        let child = select_child(tree, id, reference, cfg).expect("expanded node has children");
        let mv = tree.node(child).mv.expect("child has a move");
        state.play(mv);
        trace.push((mover, mv));
        path.push(child);
        id = child;
    };
    backpropagate(tree, path, &outcome, trace, tables, cfg);
}

/// Freezes the root statistics into a [`TurnSnapshot`].
pub fn build_snapshot<S: GameState>(
    tree: &SearchTree<S>,
    tables: &EnhancementTables,
    cfg: &SearchConfig,
    iterations: u64,
    chosen: NodeId,
    rationale: Rationale,
) -> TurnSnapshot {
    let flags = cfg.enhancements;
    let root = tree.root();
    let me = root.mover;
    let state = tree.root_state();
    let context: Vec<MoveId> = state.recent_moves().iter().flatten().copied().collect();
    let chosen_mv = tree.node(chosen).mv.expect("child has a move");
    let move_stats = root
        .moves()
        .iter()
        .enumerate()
        .map(|(i, &mv)| {
            let child = root.children().get(i).map(|&c| tree.node(c));
            let mut stats = MoveStats::new(
                state.notation(mv),
                child.map_or(0, |c| c.visits),
                child.map_or(0.0, |c| c.mean(me)),
            );
            if let Some(c) = child.filter(|_| flags.solver) {
                let view = c.bounds.for_parent();
                (stats.pess, stats.opt) = view.values();
                stats.solved = view.solved().map(|s| SolvedInfo {
                    value: s.value(),
                    distance: s.distance().unwrap_or(c.draw_distance + 1),
                });
            }
            if flags.grave {
                let a = root.amaf.get(me, mv);
                stats.amaf = Some(AmafSummary {
                    visits: a.count,
                    score: a.mean_or(0.0),
                });
            }
            let unigram = if flags.mast {
                Some(tables.mast.get(me, mv))
            } else if flags.nst {
                Some(tables.nst.get(me, &[mv]))
            } else {
                None
            };
            if let Some(u) = unigram {
                stats.ngrams.push(NGramSummary {
                    n: 1,
                    visits: u.count,
                    score: u.mean_or(0.0),
                });
            }
            if flags.nst {
                for n in 2..=cfg.params.nst_report_length.min(context.len() + 1) {
                    let mut gram = context[context.len() + 1 - n..].to_vec();
                    gram.push(mv);
                    let g = tables.nst.get(me, &gram);
                    stats.ngrams.push(NGramSummary {
                        n,
                        visits: g.count,
                        score: g.mean_or(0.0),
                    });
                }
            }
            if flags.pn {
                stats.pn = Some(child.map_or(crate::enhancements::PnStats::LEAF, |c| c.pn));
            }
            stats
        })
        .collect();
    let mut after = state.clone();
    after.play(chosen_mv);
    let pv = tree
        .line_from(chosen, after, cfg.pv_max_plies, flags.solver)
        .into_iter()
        .map(|m| m.notation)
        .collect();
    TurnSnapshot {
        game: state.game_id(),
        mover: me,
        iterations,
        previous_turn_score: None,
        move_stats,
        selected_index: root
            .moves()
            .iter()
            .position(|&m| m == chosen_mv)
            .expect("chosen is a root move"),
        rationale,
        principal_variation: pv,
        enhancements: flags,
        root_pn: flags.pn.then_some(root.pn),
    }
}
