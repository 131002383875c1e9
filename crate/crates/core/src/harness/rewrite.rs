//! Bounded bidirectional search for relator-insertion paths between words.
//!
//! Words are expanded into unit letters (`T^3` becomes `T T T`) and kept
//! freely reduced: `x x⁻¹` cancels, and so does `x x` for the involutive
//! letters. A move inserts a cyclic rotation of a relator or its inverse at
//! some position and reduces again; deleting an occurrence is the same move
//! with the inverse rotation. Dictionary moves swap a letter for its
//! two-letter expansion (`T ↔ K V`, `H(p) ↔ I(p) U`, ...) in either
//! direction.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::presentation::{corrected_variants, instantiate, Catalog, Expectation, Relator};
use crate::words::{Base, GenLetter, Word};

/// Limits for one search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Primes used to instantiate relator families.
    pub primes: Vec<u64>,
    /// Maximum number of moves in a returned path.
    pub depth: usize,
    /// Maximum unit length of any intermediate word.
    pub length_cap: usize,
    /// Maximum number of distinct words visited across both directions.
    pub node_budget: usize,
}

/// A letter with exponent ±1; involutions never carry `inv = true`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Unit {
    base: Base,
    inv: bool,
}

fn units(w: &Word) -> Vec<Unit> {
    let mut out = Vec::new();
    for l in w.letters() {
        let count = if l.base.is_involution() {
            usize::from(l.exp.bit(0))
        } else {
            usize::try_from(l.exp.magnitude()).expect("exponent fits in memory")
        };
        let inv = !l.base.is_involution() && l.exp < BigInt::from(0);
        out.extend(std::iter::repeat_n(Unit { base: l.base.clone(), inv }, count));
    }
    out
}

fn from_units<'a>(us: impl IntoIterator<Item = &'a Unit>) -> Word {
    let mut letters: Vec<GenLetter> = Vec::new();
    for u in us {
        let step = if u.inv { -1 } else { 1 };
        match letters.last_mut() {
            Some(last) if last.base == u.base && (last.exp < BigInt::from(0)) == u.inv && !u.base.is_involution() => {
                last.exp += step;
            }
            _ => letters.push(GenLetter::new(u.base.clone(), step).expect("unit letter")),
        }
    }
    Word::from_letters(letters)
}

/// One move of a rewriting path, in terms of unit letters of the current word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteMove {
    /// Insert `piece` before unit position `at`, then reduce.
    Insert { at: usize, piece: Word, relator: String },
    /// Replace the unit letters `from` starting at `at` with `to`, then reduce.
    Substitute { at: usize, from: Word, to: Word },
}

impl fmt::Display for RewriteMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteMove::Insert { at, piece, relator } => write!(f, "insert {relator} rotation \"{piece}\" at {at}"),
            RewriteMove::Substitute { at, from, to } => write!(f, "replace \"{from}\" by \"{to}\" at {at}"),
        }
    }
}

impl RewriteMove {
    /// Applies the move to `word` (given in any form; it is reduced first).
    /// `None` if the move does not fit the word.
    pub fn apply(&self, word: &Word) -> Option<Word> {
        let cur = reduce_units(units(word));
        let next = match self {
            RewriteMove::Insert { at, piece, .. } => {
                if *at > cur.len() {
                    return None;
                }
                let mut v = cur[..*at].to_vec();
                v.extend(units(piece));
                v.extend_from_slice(&cur[*at..]);
                v
            }
            RewriteMove::Substitute { at, from, to } => {
                let from = units(from);
                if cur.get(*at..*at + from.len())? != from.as_slice() {
                    return None;
                }
                let mut v = cur[..*at].to_vec();
                v.extend(units(to));
                v.extend_from_slice(&cur[*at + from.len()..]);
                v
            }
        };
        Some(from_units(&reduce_units(next)))
    }
}

fn cancels(a: &Unit, b: &Unit) -> bool {
    a.base == b.base && (a.base.is_involution() || a.inv != b.inv)
}

fn reduce_units(v: Vec<Unit>) -> Vec<Unit> {
    let mut out: Vec<Unit> = Vec::with_capacity(v.len());
    for u in v {
        if out.last().is_some_and(|t| cancels(t, &u)) {
            out.pop();
        } else {
            out.push(u);
        }
    }
    out
}

/// Reduced form used by the search: free reduction on unit letters.
pub fn search_normal_form(w: &Word) -> Word {
    from_units(&reduce_units(units(&w.free_reduce())))
}

/// A rewriting path with the word reached after each move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub mv: RewriteMove,
    pub result: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Path(Vec<RewriteStep>),
    Exhausted { visited: usize },
}

impl SearchOutcome {
    pub fn is_path(&self) -> bool {
        matches!(self, SearchOutcome::Path(_))
    }
}

/// Replays `path` from `start`; returns the final word if every move applies
/// and produces the recorded intermediate word.
pub fn replay(start: &Word, path: &[RewriteStep]) -> Option<Word> {
    let mut cur = search_normal_form(start);
    for step in path {
        let next = step.mv.apply(&cur)?;
        if next != step.result {
            return None;
        }
        cur = next;
    }
    Some(cur)
}

// Interned unit letter: generator index and inversion flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Sym {
    gen: u16,
    inv: bool,
}

struct Piece {
    syms: Vec<Sym>,
    relator: String,
}

struct DictRule {
    from: Vec<Sym>,
    to: Vec<Sym>,
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Insert { at: usize, piece: usize },
    Substitute { at: usize, rule: usize },
}

struct Node {
    word: Vec<Sym>,
    parent: Option<(usize, Move)>,
}

#[derive(Default)]
struct Side {
    nodes: Vec<Node>,
    index: HashMap<Vec<Sym>, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn rooted(word: Vec<Sym>) -> Self {
        let mut side = Side::default();
        side.index.insert(word.clone(), 0);
        side.nodes.push(Node { word, parent: None });
        side.frontier.push(0);
        side
    }

    // Moves from the root to node `i`, with the word after each.
    fn chain(&self, mut i: usize) -> Vec<(Move, usize)> {
        let mut out = Vec::new();
        while let Some((parent, mv)) = self.nodes[i].parent {
            out.push((mv, i));
            i = parent;
        }
        out.reverse();
        out
    }
}

/// Relator pieces and dictionary rules over an interned alphabet.
struct Engine {
    gens: Vec<Base>,
    pieces: Vec<Piece>,
    rules: Vec<DictRule>,
    length_cap: usize,
}

impl Engine {
    fn new(relators: &[Relator], dictionary: bool, primes: &[u64], length_cap: usize) -> Self {
        let mut engine = Engine { gens: Vec::new(), pieces: Vec::new(), rules: Vec::new(), length_cap };
        let mut seen = std::collections::HashSet::new();
        for r in relators {
            let mut syms = engine.encode(&r.word);
            // cyclic reduction
            while syms.len() >= 2 && engine.cancels(syms[0], syms[syms.len() - 1]) {
                syms.pop();
                syms.remove(0);
            }
            if syms.is_empty() || syms.len() > length_cap {
                continue;
            }
            let inverse = engine.invert(&syms);
            for cyc in [syms, inverse] {
                for k in 0..cyc.len() {
                    let mut rot = cyc[k..].to_vec();
                    rot.extend_from_slice(&cyc[..k]);
                    if seen.insert(rot.clone()) {
                        engine.pieces.push(Piece { syms: rot, relator: r.id() });
                    }
                }
            }
        }
        if dictionary {
            let mut pairs: Vec<(Word, Word)> = [("T", "K V"), ("S", "U V"), ("L", "K U"), ("V", "I(1) I(-1)")]
                .iter()
                .map(|(a, b)| (a.parse().expect("rule"), b.parse().expect("rule")))
                .collect();
            for &p in primes {
                let p = BigRational::from_integer(BigInt::from(p));
                pairs.push((
                    Word::from_letters(vec![GenLetter::unit(Base::H(p.clone()))]),
                    Word::from_letters(vec![GenLetter::unit(Base::I(p)), GenLetter::unit(Base::U)]),
                ));
            }
            let mut seen_rules = std::collections::HashSet::new();
            for (a, b) in pairs {
                let (a, b) = (engine.encode(&a), engine.encode(&b));
                let (ai, bi) = (engine.invert(&a), engine.invert(&b));
                for (from, to) in [(a.clone(), b.clone()), (b, a), (ai.clone(), bi.clone()), (bi, ai)] {
                    if seen_rules.insert((from.clone(), to.clone())) {
                        engine.rules.push(DictRule { from, to });
                    }
                }
            }
        }
        engine
    }

    fn intern(&mut self, base: &Base) -> u16 {
        if let Some(i) = self.gens.iter().position(|g| g == base) {
            return i as u16;
        }
        self.gens.push(base.clone());
        (self.gens.len() - 1) as u16
    }

    fn encode(&mut self, w: &Word) -> Vec<Sym> {
        let us = reduce_units(units(w));
        us.iter().map(|u| Sym { gen: self.intern(&u.base), inv: u.inv }).collect()
    }

    fn decode(&self, syms: &[Sym]) -> Word {
        let us: Vec<Unit> = syms.iter().map(|s| Unit { base: self.gens[s.gen as usize].clone(), inv: s.inv }).collect();
        from_units(&us)
    }

    fn involutive(&self, s: Sym) -> bool {
        self.gens[s.gen as usize].is_involution()
    }

    fn cancels(&self, a: Sym, b: Sym) -> bool {
        a.gen == b.gen && (a.inv != b.inv || self.involutive(a))
    }

    fn invert(&self, syms: &[Sym]) -> Vec<Sym> {
        syms.iter()
            .rev()
            .map(|&s| Sym { gen: s.gen, inv: !s.inv && !self.involutive(s) })
            .collect()
    }

    fn push_reduced(&self, out: &mut Vec<Sym>, s: Sym) {
        if out.last().is_some_and(|&t| self.cancels(t, s)) {
            out.pop();
        } else {
            out.push(s);
        }
    }

    fn splice(&self, word: &[Sym], at: usize, remove: usize, insert: &[Sym]) -> Option<Vec<Sym>> {
        let mut out = word[..at].to_vec();
        for &s in insert.iter().chain(&word[at + remove..]) {
            self.push_reduced(&mut out, s);
        }
        (out.len() <= self.length_cap).then_some(out)
    }

    fn apply(&self, word: &[Sym], mv: Move) -> Option<Vec<Sym>> {
        match mv {
            Move::Insert { at, piece } => {
                if at > word.len() {
                    return None;
                }
                self.splice(word, at, 0, &self.pieces[piece].syms)
            }
            Move::Substitute { at, rule } => {
                let r = &self.rules[rule];
                if word.get(at..at + r.from.len())? != r.from.as_slice() {
                    return None;
                }
                self.splice(word, at, r.from.len(), &r.to)
            }
        }
    }

    fn neighbors(&self, word: &[Sym]) -> Vec<(Move, Vec<Sym>)> {
        let mut out = Vec::new();
        for piece in 0..self.pieces.len() {
            for at in 0..=word.len() {
                let mv = Move::Insert { at, piece };
                if let Some(next) = self.apply(word, mv) {
                    out.push((mv, next));
                }
            }
        }
        for rule in 0..self.rules.len() {
            for at in 0..word.len() {
                let mv = Move::Substitute { at, rule };
                if let Some(next) = self.apply(word, mv) {
                    out.push((mv, next));
                }
            }
        }
        out
    }

    fn public_move(&self, mv: Move) -> RewriteMove {
        match mv {
            Move::Insert { at, piece } => RewriteMove::Insert {
                at,
                piece: self.decode(&self.pieces[piece].syms),
                relator: self.pieces[piece].relator.clone(),
            },
            Move::Substitute { at, rule } => RewriteMove::Substitute {
                at,
                from: self.decode(&self.rules[rule].from),
                to: self.decode(&self.rules[rule].to),
            },
        }
    }

    // A forward move taking `from` to `to`, if one exists.
    fn find_move(&self, from: &[Sym], to: &[Sym]) -> Option<Move> {
        self.neighbors(from).into_iter().find(|(_, w)| w == to).map(|(mv, _)| mv)
    }

    fn search(&self, start: Vec<Sym>, goal: Vec<Sym>, depth: usize, budget: usize) -> SearchOutcome {
        if start == goal {
            return SearchOutcome::Path(Vec::new());
        }
        let mut fwd = Side::rooted(start);
        let mut bwd = Side::rooted(goal);
        while fwd.depth + bwd.depth < depth {
            let expand_fwd = fwd.frontier.len() <= bwd.frontier.len();
            let (side, other) = if expand_fwd { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
            if side.frontier.is_empty() {
                break;
            }
            let layer = std::mem::take(&mut side.frontier);
            let mut meetings = Vec::new();
            'layer: for &i in &layer {
                let word = side.nodes[i].word.clone();
                for (mv, next) in self.neighbors(&word) {
                    if side.index.contains_key(&next) {
                        continue;
                    }
                    let id = side.nodes.len();
                    side.index.insert(next.clone(), id);
                    if let Some(&j) = other.index.get(&next) {
                        meetings.push((id, j));
                    }
                    side.nodes.push(Node { word: next, parent: Some((i, mv)) });
                    side.frontier.push(id);
                    if side.nodes.len() + other.nodes.len() > budget {
                        break 'layer;
                    }
                }
            }
            side.depth += 1;
            for (a, b) in meetings {
                let (f, b) = if expand_fwd { (a, b) } else { (b, a) };
                if let Some(path) = self.stitch(&fwd, f, &bwd, b) {
                    return SearchOutcome::Path(path);
                }
            }
            if fwd.nodes.len() + bwd.nodes.len() > budget {
                break;
            }
        }
        SearchOutcome::Exhausted { visited: fwd.nodes.len() + bwd.nodes.len() }
    }

    // Joins root→f with the reversal of goal→b, where f and b hold the same word.
    fn stitch(&self, fwd: &Side, f: usize, bwd: &Side, b: usize) -> Option<Vec<RewriteStep>> {
        let mut steps = Vec::new();
        for (mv, node) in fwd.chain(f) {
            steps.push(RewriteStep { mv: self.public_move(mv), result: self.decode(&fwd.nodes[node].word) });
        }
        let mut cur = b;
        while let Some((parent, _)) = bwd.nodes[cur].parent {
            let mv = self.find_move(&bwd.nodes[cur].word, &bwd.nodes[parent].word)?;
            steps.push(RewriteStep { mv: self.public_move(mv), result: self.decode(&bwd.nodes[parent].word) });
            cur = parent;
        }
        Some(steps)
    }
}

fn tv_letters_only(w: &Word) -> bool {
    w.letters().iter().all(|l| matches!(l.base, Base::T | Base::U | Base::V | Base::H(_)))
}

/// The relators available to the search, and whether dictionary moves apply.
///
/// Words over `{T, U, V, H}` are searched with the tv catalog alone; any
/// other letter brings in the involution catalog (minus its flagged printed
/// relators, plus the corrected variants) and the dictionary moves.
pub fn relator_set(w1: &Word, w2: &Word, primes: &[u64]) -> (Vec<Relator>, bool) {
    let mut relators = instantiate(Catalog::Tv, primes);
    let mixed = !(tv_letters_only(w1) && tv_letters_only(w2));
    if mixed {
        relators.extend(
            instantiate(Catalog::Involution, primes)
                .into_iter()
                .filter(|r| r.expected == Expectation::Identity),
        );
        relators.extend(corrected_variants());
    }
    (relators, mixed)
}

/// Searches for a move sequence turning `w1` into `w2`.
///
/// Fails with `PreconditionViolated` when the words evaluate differently.
/// A returned path has been replayed and checked move by move.
pub fn rewrite_search(w1: &Word, w2: &Word, limits: &SearchLimits) -> Result<SearchOutcome> {
    if w1.eval() != w2.eval() {
        return Err(Error::PreconditionViolated(format!("\"{w1}\" and \"{w2}\" evaluate differently")));
    }
    let (relators, dictionary) = relator_set(w1, w2, &limits.primes);
    let mut engine = Engine::new(&relators, dictionary, &limits.primes, limits.length_cap);
    let start = engine.encode(&w1.free_reduce());
    let goal = engine.encode(&w2.free_reduce());
    let outcome = engine.search(start, goal, limits.depth, limits.node_budget);
    if let SearchOutcome::Path(path) = &outcome {
        let end = replay(w1, path);
        if end.as_ref() != Some(&search_normal_form(w2)) {
            return Ok(SearchOutcome::Exhausted { visited: 0 });
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn limits() -> SearchLimits {
        SearchLimits { primes: vec![2], depth: 10, length_cap: 24, node_budget: 100_000 }
    }

    fn path_len(o: &SearchOutcome) -> Option<usize> {
        match o {
            SearchOutcome::Path(p) => Some(p.len()),
            SearchOutcome::Exhausted { .. } => None,
        }
    }

    #[test]
    fn identical_words_need_no_moves() {
        let out = rewrite_search(&w("T U H(2)"), &w("T U H(2)"), &limits()).unwrap();
        assert_eq!(out, SearchOutcome::Path(Vec::new()));
        let out = rewrite_search(&w("T T^-1 U"), &w("U"), &limits()).unwrap();
        assert_eq!(out, SearchOutcome::Path(Vec::new()));
    }

    #[test]
    fn uv_commute_via_relator_i() {
        let out = rewrite_search(&w("U V"), &w("V U"), &limits()).unwrap();
        let n = path_len(&out).expect("path");
        assert!(n <= 4, "{out:?}");
        let SearchOutcome::Path(p) = out else { unreachable!() };
        assert_eq!(replay(&w("U V"), &p), Some(w("V U")));
    }

    #[test]
    fn kv_to_t_by_dictionary() {
        let out = rewrite_search(&w("K V"), &w("T"), &limits()).unwrap();
        assert_eq!(path_len(&out), Some(1));
    }

    #[test]
    fn baumslag_solitar_relation() {
        let out = rewrite_search(&w("H(2)^-1 T^2 H(2)"), &w("T"), &limits()).unwrap();
        assert_eq!(path_len(&out), Some(1));
    }

    #[test]
    fn mismatched_words_are_rejected() {
        assert!(matches!(rewrite_search(&w("T"), &w("U"), &limits()), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn unit_expansion_round_trips() {
        for s in ["T^3 U H(2)^-2 V", "", "I(3) K L^-2"] {
            assert_eq!(from_units(&units(&w(s))), w(s));
        }
        assert_eq!(search_normal_form(&w("T U U T^-1 V")), w("V"));
    }

    #[test]
    fn moves_apply_to_words() {
        let mv = RewriteMove::Substitute { at: 0, from: w("K V"), to: w("T") };
        assert_eq!(mv.apply(&w("K V U")), Some(w("T U")));
        assert_eq!(mv.apply(&w("U K V")), None);
        let ins = RewriteMove::Insert { at: 2, piece: w("V U V U"), relator: "tv/I.c".into() };
        assert_eq!(ins.apply(&w("U V")), Some(w("V U")));
    }
}
