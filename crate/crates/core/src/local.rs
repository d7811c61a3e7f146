//! Synchronous LOCAL-model simulation on disjoint oriented paths.
//!
//! Each round every node broadcasts one message computed from its state at
//! the end of the previous round, then updates its state from the messages
//! of its predecessor and successor. Messages are double-buffered, so the
//! order in which nodes are updated within a round cannot matter.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::FunctionalGraph;
use crate::hom::ErgodicPlan;

/// Iterated base-2 logarithm: how many times `log2` brings `n` down to at most 1.
pub fn log_star(n: u64) -> usize {
    let mut x = n as f64;
    let mut count = 0;
    while x > 1.0 {
        x = x.log2();
        count += 1;
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdAssignment {
    /// `0, 1, 2, …` in node order.
    Sequential,
    /// Decreasing along every path, spread over the whole ID space.
    Descending,
    /// Distinct uniform sample of the ID space.
    Random,
}

/// Disjoint oriented paths with distinct IDs from `0..id_space`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
    ids: Vec<u64>,
    id_space: u64,
}

impl Network {
    /// `n³ + 1`, the customary polynomial ID space.
    pub fn default_id_space(n: usize) -> u64 {
        let n = n.max(1) as u64;
        n.saturating_mul(n).saturating_mul(n).saturating_add(1)
    }

    pub fn new(succ: Vec<Option<usize>>, ids: Vec<u64>, id_space: u64) -> Result<Self> {
        let n = succ.len();
        if ids.len() != n {
            return Err(Error::Network(format!("{} IDs for {n} nodes", ids.len())));
        }
        let mut pred = vec![None; n];
        for (x, s) in succ.iter().enumerate() {
            if let Some(y) = *s {
                if y >= n {
                    return Err(Error::SuccessorOutOfRange { vertex: x, succ: y, n });
                }
                if pred[y].replace(x).is_some() {
                    return Err(Error::Network(format!("node {y} has two predecessors")));
                }
            }
        }
        let g = FunctionalGraph::build(n, succ.clone())?;
        if let Err(Error::Cyclic(v)) = g.ensure_acyclic() {
            return Err(Error::Network(format!("node {v} lies on a cycle")));
        }
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Network(format!("duplicate ID {}", w[0])));
        }
        if let Some(&max) = sorted.last() {
            if max >= id_space {
                return Err(Error::Network(format!("ID {max} outside the ID space {id_space}")));
            }
        }
        Ok(Self { succ, pred, ids, id_space })
    }

    /// Paths of the given lengths laid out consecutively.
    pub fn paths(lengths: &[usize], ids: IdAssignment, seed: u64) -> Result<Self> {
        let n: usize = lengths.iter().sum();
        let mut succ = Vec::with_capacity(n);
        for &len in lengths {
            let start = succ.len();
            for i in 0..len {
                succ.push((i + 1 < len).then_some(start + i + 1));
            }
        }
        let id_space = Self::default_id_space(n);
        let ids = assign_ids(n, id_space, ids, seed);
        Self::new(succ, ids, id_space)
    }

    pub fn path(n: usize, ids: IdAssignment, seed: u64) -> Result<Self> {
        Self::paths(&[n], ids, seed)
    }

    /// A functional graph whose vertices have in-degree at most one.
    pub fn from_graph(g: &FunctionalGraph, ids: IdAssignment, seed: u64) -> Result<Self> {
        let id_space = Self::default_id_space(g.len());
        Self::new(g.successors().to_vec(), assign_ids(g.len(), id_space, ids, seed), id_space)
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn id(&self, v: usize) -> u64 {
        self.ids[v]
    }

    pub fn id_space(&self) -> u64 {
        self.id_space
    }

    pub fn succ(&self, v: usize) -> Option<usize> {
        self.succ[v]
    }

    pub fn pred(&self, v: usize) -> Option<usize> {
        self.pred[v]
    }

    pub fn to_graph(&self) -> FunctionalGraph {
        FunctionalGraph::build(self.len(), self.succ.clone()).expect("networks are valid graphs")
    }
}

fn assign_ids(n: usize, id_space: u64, how: IdAssignment, seed: u64) -> Vec<u64> {
    match how {
        IdAssignment::Sequential => (0..n as u64).collect(),
        IdAssignment::Descending => {
            let step = (id_space / n.max(1) as u64).max(1);
            (0..n as u64).map(|i| (n as u64 - 1 - i) * step).collect()
        }
        IdAssignment::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut seen = std::collections::HashSet::with_capacity(n);
            let mut out = Vec::with_capacity(n);
            while out.len() < n {
                let id = rand::Rng::gen_range(&mut rng, 0..id_space);
                if seen.insert(id) {
                    out.push(id);
                }
            }
            out
        }
    }
}

/// What a node knows before the first round.
#[derive(Debug, Clone, Copy)]
pub struct NodeContext {
    pub id: u64,
    pub has_pred: bool,
    pub has_succ: bool,
    pub id_space: u64,
}

pub trait LocalAlgorithm {
    type State: Clone;
    type Msg: Clone;

    fn name(&self) -> String;
    fn init(&self, ctx: &NodeContext) -> Self::State;
    fn send(&self, state: &Self::State) -> Self::Msg;
    fn step(
        &self,
        round: usize,
        state: &mut Self::State,
        from_pred: Option<&Self::Msg>,
        from_succ: Option<&Self::Msg>,
    );
    fn halted(&self, state: &Self::State) -> bool;
    fn output(&self, state: &Self::State) -> Option<u64>;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundTrace {
    pub algorithm: String,
    pub rounds: usize,
    pub outputs: Vec<Option<u64>>,
}

/// Nodes per block of a random schedule.
pub const SCHEDULE_BLOCK: usize = 1024;

/// Processing order for one round: blocks of [`SCHEDULE_BLOCK`] consecutive
/// nodes in random order, each block itself in random order. Up to one block
/// this is a uniform permutation; beyond that it keeps memory access local.
fn shuffle_schedule(order: &mut [usize], blocks: &mut [usize], rng: &mut ChaCha8Rng) {
    blocks.shuffle(rng);
    let mut at = 0;
    for &b in blocks.iter() {
        let lo = b * SCHEDULE_BLOCK;
        let hi = (lo + SCHEDULE_BLOCK).min(order.len());
        let chunk = &mut order[at..at + (hi - lo)];
        for (slot, v) in chunk.iter_mut().zip(lo..hi) {
            *slot = v;
        }
        chunk.shuffle(rng);
        at += hi - lo;
    }
}

/// Runs until every node halts. With a `schedule` seed, nodes are updated in
/// a fresh random order each round.
pub fn simulate<A: LocalAlgorithm>(
    alg: &A,
    net: &Network,
    cap: usize,
    schedule: Option<u64>,
) -> Result<RoundTrace> {
    let n = net.len();
    let mut states: Vec<A::State> = (0..n)
        .map(|v| {
            alg.init(&NodeContext {
                id: net.id(v),
                has_pred: net.pred(v).is_some(),
                has_succ: net.succ(v).is_some(),
                id_space: net.id_space(),
            })
        })
        .collect();
    let mut rng = schedule.map(ChaCha8Rng::seed_from_u64);
    let mut order: Vec<usize> = (0..n).collect();
    let mut blocks: Vec<usize> = (0..n.div_ceil(SCHEDULE_BLOCK)).collect();
    let mut msgs: Vec<A::Msg> = Vec::with_capacity(n);
    let links: Vec<[u32; 2]> = (0..n)
        .map(|v| [net.pred(v), net.succ(v)].map(|u| u.map_or(u32::MAX, |u| u as u32)))
        .collect();
    let mut running = states.iter().filter(|s| !alg.halted(s)).count();
    let mut rounds = 0;
    while running > 0 {
        if rounds == cap {
            return Err(Error::RoundCapExceeded(cap));
        }
        rounds += 1;
        msgs.clear();
        msgs.extend(states.iter().map(|s| alg.send(s)));
        if let Some(rng) = rng.as_mut() {
            shuffle_schedule(&mut order, &mut blocks, rng);
        }
        for &v in &order {
            let state = &mut states[v];
            if alg.halted(state) {
                continue;
            }
            let [p, q] = links[v];
            let from_pred = (p != u32::MAX).then(|| &msgs[p as usize]);
            let from_succ = (q != u32::MAX).then(|| &msgs[q as usize]);
            alg.step(rounds, state, from_pred, from_succ);
            if alg.halted(state) {
                running -= 1;
            }
        }
    }
    Ok(RoundTrace {
        algorithm: alg.name(),
        rounds,
        outputs: states.iter().map(|s| alg.output(s)).collect(),
    })
}

/// Outputs its own ID without communicating.
#[derive(Debug, Clone, Copy)]
pub struct Constant;

impl LocalAlgorithm for Constant {
    type State = u64;
    type Msg = ();

    fn name(&self) -> String {
        "constant".into()
    }
    fn init(&self, ctx: &NodeContext) -> u64 {
        ctx.id
    }
    fn send(&self, _: &u64) {}
    fn step(&self, _: usize, _: &mut u64, _: Option<&()>, _: Option<&()>) {}
    fn halted(&self, _: &u64) -> bool {
        true
    }
    fn output(&self, s: &u64) -> Option<u64> {
        Some(*s)
    }
}

/// Learns its successor's ID in one round; sinks output nothing.
#[derive(Debug, Clone, Copy)]
pub struct Echo;

#[derive(Debug, Clone)]
pub struct EchoState {
    id: u64,
    heard: Option<u64>,
    done: bool,
}

impl LocalAlgorithm for Echo {
    type State = EchoState;
    type Msg = u64;

    fn name(&self) -> String {
        "echo".into()
    }
    fn init(&self, ctx: &NodeContext) -> EchoState {
        EchoState { id: ctx.id, heard: None, done: false }
    }
    fn send(&self, s: &EchoState) -> u64 {
        s.id
    }
    fn step(&self, _: usize, s: &mut EchoState, _: Option<&u64>, from_succ: Option<&u64>) {
        s.heard = from_succ.copied();
        s.done = true;
    }
    fn halted(&self, s: &EchoState) -> bool {
        s.done
    }
    fn output(&self, s: &EchoState) -> Option<u64> {
        s.heard
    }
}

/// Cole–Vishkin iterations that bring colors below `id_space` down to at most 6.
pub fn color_reduction_iterations(id_space: u64) -> usize {
    let mut colors = id_space.max(2) as u128;
    let mut iterations = 0;
    while colors > 6 {
        let bits = 128 - (colors - 1).leading_zeros() as u128;
        colors = 2 * bits;
        iterations += 1;
    }
    iterations
}

/// One Cole–Vishkin step against the successor's color (or `c ^ 1` at the end).
fn cole_vishkin(c: u64, next: Option<u64>) -> u64 {
    let other = next.unwrap_or(c ^ 1);
    let i = (c ^ other).trailing_zeros() as u64;
    2 * i + ((c >> i) & 1)
}

/// Marks an absent value in messages and registers.
const NONE: u64 = u64::MAX;
/// Marks an unknown hop count.
const FAR: u32 = u32::MAX;

fn known(v: u64) -> Option<u64> {
    (v != NONE).then_some(v)
}

/// Members of an `r`-ruling set: `r`-forward-independent and hitting every
/// node with at least `r + 1` successors ahead, with gaps in `[r + 1, 2r + 1]`.
///
/// Level `k` runs a maximal independent set computation on the path formed by
/// the previous level's members, which sit between `2^k` and `3^k` hops
/// apart; each virtual exchange takes `3^k` rounds of relaying. After
/// `⌈log2(r + 1)⌉` levels the members are more than `r` apart, and a final
/// spacing phase adds members every `r + 1` steps inside long gaps.
#[derive(Debug, Clone, Copy)]
pub struct RulingSet {
    pub r: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Schedule {
    levels: u8,
    cv_iterations: u8,
    r: u32,
}

enum Phase {
    Level { epoch: usize, end_of_epoch: bool, end_of_level: bool },
    Spacing { last: bool },
}

impl Schedule {
    fn epochs_per_level(&self) -> usize {
        self.cv_iterations as usize + 6
    }

    fn hop(level: usize) -> usize {
        3usize.pow(level as u32)
    }

    fn spacing_rounds(&self) -> usize {
        3usize.pow(self.levels as u32)
    }

    fn total_rounds(&self) -> usize {
        (0..self.levels as usize)
            .map(|k| self.epochs_per_level() * Self::hop(k))
            .sum::<usize>()
            + self.spacing_rounds()
    }
}

#[derive(Debug, Clone)]
pub struct RulingState {
    id: u64,
    color: u64,
    /// During the levels: the value shown by the nearest participant ahead /
    /// behind. During spacing: hops to the nearest member ahead / behind.
    ahead: u64,
    behind: u64,
    member: bool,
    in_mis: bool,
    done: bool,
    schedule: Schedule,
    /// Position in the schedule: level, epoch, rounds into the epoch, and `3^level`.
    level: u8,
    epoch: u8,
    tick: u32,
    hop: u32,
}

impl RulingState {
    /// Phase of the round about to run; advances the position counters.
    fn advance(&mut self) -> Phase {
        self.tick += 1;
        if self.level >= self.schedule.levels {
            return Phase::Spacing { last: self.tick == self.hop };
        }
        let epoch = self.epoch as usize;
        let end_of_epoch = self.tick == self.hop;
        let end_of_level = end_of_epoch && epoch + 1 == self.schedule.epochs_per_level();
        if end_of_epoch {
            self.tick = 0;
            self.epoch += 1;
        }
        if end_of_level {
            self.epoch = 0;
            self.level += 1;
            self.hop *= 3;
        }
        Phase::Level { epoch, end_of_epoch, end_of_level }
    }
}

/// Broadcast: what the predecessor and the successor should record.
#[derive(Debug, Clone, Copy)]
pub struct RulingMsg {
    toward_pred: u64,
    toward_succ: u64,
}

impl RulingSet {
    pub fn levels(r: usize) -> usize {
        let mut levels = 0;
        while (1usize << levels) < r + 1 {
            levels += 1;
        }
        levels
    }

    fn schedule(&self, id_space: u64) -> Schedule {
        Schedule {
            levels: Self::levels(self.r) as u8,
            cv_iterations: color_reduction_iterations(id_space) as u8,
            r: self.r as u32,
        }
    }

    /// Rounds taken on any network with the given ID space.
    pub fn rounds(&self, id_space: u64) -> usize {
        self.schedule(id_space).total_rounds()
    }

    /// Value shown to the neighbors during the current epoch.
    fn published(s: &RulingState) -> u64 {
        if (s.epoch as usize) < s.schedule.cv_iterations as usize + 3 {
            s.color
        } else {
            s.in_mis as u64
        }
    }

    fn end_of_epoch(s: &mut RulingState, epoch: usize) {
        let cv = s.schedule.cv_iterations as usize;
        if s.member {
            if epoch < cv {
                s.color = cole_vishkin(s.color, known(s.ahead));
            } else if epoch < cv + 3 {
                let target = 5 - (epoch - cv) as u64;
                if s.color == target {
                    s.color = (0..3)
                        .find(|&c| c != s.ahead && c != s.behind)
                        .expect("two neighbors block at most two colors");
                }
            } else {
                let class = (epoch - cv - 3) as u64;
                if s.color == class && s.ahead != 1 && s.behind != 1 {
                    s.in_mis = true;
                }
            }
        }
    }

    fn end_of_level(s: &mut RulingState) {
        if s.member {
            s.member = s.in_mis;
        }
        s.in_mis = false;
        s.color = s.id;
    }
}

impl LocalAlgorithm for RulingSet {
    type State = RulingState;
    type Msg = RulingMsg;

    fn name(&self) -> String {
        format!("ruling-set:{}", self.r)
    }

    fn init(&self, ctx: &NodeContext) -> RulingState {
        RulingState {
            id: ctx.id,
            color: ctx.id,
            ahead: NONE,
            behind: NONE,
            member: true,
            in_mis: false,
            done: false,
            schedule: self.schedule(ctx.id_space),
            level: 0,
            epoch: 0,
            tick: 0,
            hop: 1,
        }
    }

    fn send(&self, s: &RulingState) -> RulingMsg {
        let spacing = s.level >= s.schedule.levels;
        match (s.member, spacing) {
            (true, false) => {
                let v = Self::published(s);
                RulingMsg { toward_pred: v, toward_succ: v }
            }
            (true, true) => RulingMsg { toward_pred: 0, toward_succ: 0 },
            (false, _) => RulingMsg { toward_pred: s.ahead, toward_succ: s.behind },
        }
    }

    fn step(
        &self,
        _round: usize,
        s: &mut RulingState,
        from_pred: Option<&RulingMsg>,
        from_succ: Option<&RulingMsg>,
    ) {
        match s.advance() {
            Phase::Level { epoch, end_of_epoch, end_of_level } => {
                s.ahead = from_succ.map_or(NONE, |m| m.toward_pred);
                s.behind = from_pred.map_or(NONE, |m| m.toward_succ);
                if end_of_epoch {
                    Self::end_of_epoch(s, epoch);
                }
                if end_of_level {
                    Self::end_of_level(s);
                    if s.level >= s.schedule.levels {
                        s.ahead = NONE;
                        s.behind = NONE;
                    }
                }
            }
            Phase::Spacing { last } => {
                s.behind = from_pred.map_or(NONE, |m| m.toward_succ.saturating_add(1));
                s.ahead = from_succ.map_or(NONE, |m| m.toward_pred.saturating_add(1));
                if last {
                    let gap = s.schedule.r as u64 + 1;
                    let room_ahead = s.ahead >= gap;
                    if !s.member && s.behind != NONE && s.behind.is_multiple_of(gap) && room_ahead {
                        s.member = true;
                    }
                    s.done = true;
                }
            }
        }
    }

    fn halted(&self, s: &RulingState) -> bool {
        s.done
    }

    fn output(&self, s: &RulingState) -> Option<u64> {
        Some(s.member as u64)
    }
}

/// Solves the homomorphism problem for an ergodic loopless template: a
/// ruling set with parameter `ℓ0`, then hop counts to the next member, then
/// member labels relayed back over the `ℓ0` nodes approaching each member.
#[derive(Debug, Clone)]
pub struct SolvePiH {
    plan: ErgodicPlan,
    ruling: RulingSet,
}

#[derive(Debug, Clone)]
pub struct SolveState {
    ruling: RulingState,
    /// Hops to the next member ahead.
    ahead: u32,
    /// Label of the next member ahead, once known.
    member_label: u64,
    label: u64,
    /// Rounds since the ruling set finished.
    tick: usize,
    done: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveMsg {
    ruling: RulingMsg,
    ahead: u32,
    member_label: u64,
}

impl SolvePiH {
    pub fn new(h: &Digraph) -> Result<Self> {
        let plan = ErgodicPlan::new(h)?;
        let ruling = RulingSet { r: plan.ell0.max(1) };
        Ok(Self { plan, ruling })
    }

    pub fn plan(&self) -> &ErgodicPlan {
        &self.plan
    }

    pub fn ruling(&self) -> RulingSet {
        self.ruling
    }

    fn count_rounds(&self) -> usize {
        2 * self.ruling.r + 2
    }

    /// Rounds after the ruling set: hop counts across gaps of at most
    /// `2ℓ0 + 1`, then `ℓ0` rounds of relaying labels.
    pub fn extra_rounds(&self) -> usize {
        self.count_rounds() + self.plan.ell0
    }
}

impl LocalAlgorithm for SolvePiH {
    type State = SolveState;
    type Msg = SolveMsg;

    fn name(&self) -> String {
        "solve-pi-h".into()
    }

    fn init(&self, ctx: &NodeContext) -> SolveState {
        SolveState {
            ruling: self.ruling.init(ctx),
            ahead: FAR,
            member_label: NONE,
            label: NONE,
            tick: 0,
            done: false,
        }
    }

    fn send(&self, s: &SolveState) -> SolveMsg {
        let member = s.ruling.member;
        SolveMsg {
            ruling: self.ruling.send(&s.ruling),
            ahead: if member { 0 } else { s.ahead },
            member_label: if member { s.label } else { s.member_label },
        }
    }

    fn step(
        &self,
        round: usize,
        s: &mut SolveState,
        from_pred: Option<&SolveMsg>,
        from_succ: Option<&SolveMsg>,
    ) {
        if !s.ruling.done {
            self.ruling.step(round, &mut s.ruling, from_pred.map(|m| &m.ruling), from_succ.map(|m| &m.ruling));
            return;
        }
        let ell0 = self.plan.ell0;
        s.tick += 1;
        let tick = s.tick;
        let member = s.ruling.member;
        if tick <= self.count_rounds() {
            s.ahead = from_succ.map_or(FAR, |m| m.ahead.saturating_add(1));
            if tick == self.count_rounds() && member && s.ahead != FAR {
                // A member's own label: k = (hops to the next member) - ℓ0.
                s.label = self.plan.outside_label(s.ahead as usize - ell0) as u64;
            }
            return;
        }
        s.member_label = from_succ.map_or(NONE, |m| m.member_label);
        if tick < self.count_rounds() + ell0 {
            return;
        }
        if !member && s.ahead != FAR {
            let q = s.ahead as usize;
            s.label = if q <= ell0 {
                known(s.member_label).map_or(NONE, |target| self.plan.approach_label(target as usize, q) as u64)
            } else {
                self.plan.outside_label(q - ell0) as u64
            };
        }
        s.done = true;
    }

    fn halted(&self, s: &SolveState) -> bool {
        s.done
    }

    fn output(&self, s: &SolveState) -> Option<u64> {
        known(s.label)
    }
}

/// Registered algorithms, addressable by name.
#[derive(Debug, Clone)]
pub enum AlgorithmId {
    Constant,
    Echo,
    RulingSet { r: usize },
    SolvePiH { template: Digraph },
}

impl AlgorithmId {
    pub const NAMES: [&'static str; 4] = ["constant", "echo", "ruling-set", "solve-pi-h"];

    pub fn lookup(name: &str, r: Option<usize>, template: Option<Digraph>) -> Result<Self> {
        match name {
            "constant" => Ok(Self::Constant),
            "echo" => Ok(Self::Echo),
            "ruling-set" => match r {
                Some(r) if r >= 1 => Ok(Self::RulingSet { r }),
                _ => Err(Error::InvalidParameter("ruling-set needs r >= 1".into())),
            },
            "solve-pi-h" => template
                .map(|template| Self::SolvePiH { template })
                .ok_or_else(|| Error::InvalidParameter("solve-pi-h needs a template".into())),
            other => Err(Error::UnregisteredAlgorithm(other.to_string())),
        }
    }
}

pub fn run(alg: &AlgorithmId, net: &Network, cap: usize, schedule: Option<u64>) -> Result<RoundTrace> {
    match alg {
        AlgorithmId::Constant => simulate(&Constant, net, cap, schedule),
        AlgorithmId::Echo => simulate(&Echo, net, cap, schedule),
        AlgorithmId::RulingSet { r } => simulate(&RulingSet { r: *r }, net, cap, schedule),
        AlgorithmId::SolvePiH { template } => {
            simulate(&SolvePiH::new(template)?, net, cap, schedule)
        }
    }
}

/// Members of a ruling-set trace.
pub fn members_of(trace: &RoundTrace) -> Vec<usize> {
    (0..trace.outputs.len())
        .filter(|&v| trace.outputs[v] == Some(1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hitting::{is_forward_independent, is_hitting};

    #[test]
    fn log_star_examples() {
        assert_eq!(log_star(1), 0);
        assert_eq!(log_star(2), 1);
        assert_eq!(log_star(16), 3);
        assert_eq!(log_star(65536), 4);
    }

    #[test]
    fn trivial_algorithms() {
        let net = Network::path(5, IdAssignment::Sequential, 0).unwrap();
        let t = run(&AlgorithmId::Constant, &net, 10, None).unwrap();
        assert_eq!(t.rounds, 0);
        assert_eq!(t.outputs[3], Some(3));
        let t = run(&AlgorithmId::Echo, &net, 10, None).unwrap();
        assert_eq!(t.rounds, 1);
        assert_eq!(t.outputs, vec![Some(1), Some(2), Some(3), Some(4), None]);
        assert_eq!(
            AlgorithmId::lookup("flood", None, None).unwrap_err(),
            Error::UnregisteredAlgorithm("flood".into())
        );
    }

    #[test]
    fn round_cap() {
        let net = Network::path(16, IdAssignment::Random, 1).unwrap();
        let alg = AlgorithmId::RulingSet { r: 2 };
        assert_eq!(run(&alg, &net, 3, None).unwrap_err(), Error::RoundCapExceeded(3));
        assert!(run(&alg, &net, 1000, None).is_ok());
    }

    #[test]
    fn network_validation() {
        assert!(Network::new(vec![Some(1), None], vec![4, 4], 10).is_err());
        assert!(Network::new(vec![Some(2), Some(2), None], vec![0, 1, 2], 10).is_err());
        assert!(Network::new(vec![Some(1), Some(0)], vec![0, 1], 10).is_err());
        assert!(Network::new(vec![None], vec![10], 10).is_err());
    }

    #[test]
    fn cole_vishkin_keeps_colors_proper() {
        let colors = [13u64, 7, 15, 2, 100, 0, 1];
        let next: Vec<u64> = (0..colors.len())
            .map(|i| cole_vishkin(colors[i], colors.get(i + 1).copied()))
            .collect();
        assert!(next.windows(2).all(|w| w[0] != w[1]));
        assert_eq!(color_reduction_iterations(7), 1);
        assert_eq!(color_reduction_iterations(6), 0);
    }

    #[test]
    fn solve_pi_h_matches_centralized_labels() {
        let h = Digraph::new(5, vec![(0, 1), (1, 0), (0, 2), (2, 3), (3, 0), (4, 0), (1, 4)]).unwrap();
        let net = Network::paths(&[300, 7, 1], IdAssignment::Random, 4).unwrap();
        let alg = SolvePiH::new(&h).unwrap();
        let t = simulate(&alg, &net, 100_000, None).unwrap();
        assert_eq!(t.rounds, alg.ruling().rounds(net.id_space()) + alg.extra_rounds());
        let ruling = simulate(&alg.ruling(), &net, 100_000, None).unwrap();
        let g = net.to_graph();
        let central = crate::hom::solve_with_plan(&g, alg.plan(), &members_of(&ruling)).unwrap();
        let local: Vec<Option<usize>> = t.outputs.iter().map(|o| o.map(|v| v as usize)).collect();
        assert_eq!(local, central.0);
        assert!(crate::hom::hom_violations(&g, &central, &h).is_empty());
    }

    fn check_ruling(net: &Network, r: usize) {
        let t = run(&AlgorithmId::RulingSet { r }, net, 100_000, None).unwrap();
        let g = net.to_graph();
        let m = members_of(&t);
        assert!(is_forward_independent(&g, &m, r), "r = {r}");
        assert!(is_hitting(&g, &m, r + 1), "r = {r}");
        assert_eq!(t.rounds, RulingSet { r }.rounds(net.id_space()));
    }

    #[test]
    fn ruling_set_small() {
        for r in 1..=6 {
            for how in [IdAssignment::Sequential, IdAssignment::Descending, IdAssignment::Random] {
                check_ruling(&Network::paths(&[1, 2, 3, 17, 40, 64], how, r as u64).unwrap(), r);
            }
        }
        let single = Network::path(1, IdAssignment::Sequential, 0).unwrap();
        let t = run(&AlgorithmId::RulingSet { r: 3 }, &single, 1000, None).unwrap();
        assert_eq!(t.outputs, vec![Some(1)]);
    }

    #[test]
    fn ruling_set_gaps_are_bounded() {
        let net = Network::path(1024, IdAssignment::Random, 5).unwrap();
        let t = run(&AlgorithmId::RulingSet { r: 2 }, &net, 10_000, None).unwrap();
        let m = members_of(&t);
        for w in m.windows(2) {
            assert!((3..=5).contains(&(w[1] - w[0])));
        }
        assert!(1023 - m.last().unwrap() <= 2);
    }

    #[test]
    fn schedule_does_not_matter() {
        let net = Network::paths(&[50, 70], IdAssignment::Random, 9).unwrap();
        let alg = AlgorithmId::RulingSet { r: 3 };
        let base = run(&alg, &net, 10_000, None).unwrap();
        for seed in 0..3 {
            assert_eq!(run(&alg, &net, 10_000, Some(seed)).unwrap(), base);
        }
    }
}
