//! Rewriting words with catalog relations and checking derivations.
//!
//! A derivation file has one step per line:
//!
//! ```text
//! step a3 -> at 0 with a=1,b=2
//! step d2 <- at 0 with a=1,b=2
//! ```
//!
//! `->` rewrites an occurrence of the left-hand side into the right-hand
//! side and `<-` the reverse. Positions are 0-based generator offsets.
//! Blank lines and `#` comments are ignored.

use std::fmt;

use super::catalog::{lookup, Assignment, Relation, Schematic};
use super::Word;
use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LeftToRight => "->",
            Direction::RightToLeft => "<-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub relation: String,
    pub direction: Direction,
    pub assignment: Assignment,
    pub position: usize,
}

impl fmt::Display for DerivationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let asg: Vec<String> = self
            .assignment
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "step {} {} at {} with {}",
            self.relation,
            self.direction,
            self.position,
            asg.join(",")
        )
    }
}

impl std::str::FromStr for DerivationStep {
    type Err = ParseError;

    fn from_str(line: &str) -> Result<Self, ParseError> {
        let bad = |what: &str| ParseError::new(format!("{what} in step `{}`", line.trim()));
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (relation, dir, pos, asg) = match toks.as_slice() {
            ["step", rel, dir, "at", pos, "with", asg @ ..] => (*rel, *dir, *pos, asg.join("")),
            ["step", rel, dir, "at", pos] => (*rel, *dir, *pos, String::new()),
            _ => return Err(bad("expected `step <id> <dir> at <pos> with <a=..>`")),
        };
        let direction = match dir {
            "->" | "L->R" | "→" => Direction::LeftToRight,
            "<-" | "R->L" | "←" => Direction::RightToLeft,
            _ => return Err(bad("unknown direction")),
        };
        let position = pos.parse().map_err(|_| bad("invalid position"))?;
        let mut assignment = Assignment::new();
        for pair in asg.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| bad("invalid assignment"))?;
            let mut cs = k.chars();
            let var = match (cs.next(), cs.next()) {
                (Some(c), None) => c,
                _ => return Err(bad("invalid index name")),
            };
            let value = v.parse().map_err(|_| bad("invalid index value"))?;
            if assignment.insert(var, value).is_some() {
                return Err(bad("repeated index name"));
            }
        }
        Ok(DerivationStep {
            relation: relation.to_string(),
            direction,
            assignment,
            position,
        })
    }
}

/// Parses a derivation file.
pub fn parse_derivation(text: &str) -> Result<Vec<DerivationStep>, ParseError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::parse)
        .collect()
}

fn sides(rel: &Relation, dir: Direction) -> (&[Schematic], &[Schematic]) {
    match dir {
        Direction::LeftToRight => (&rel.lhs, &rel.rhs),
        Direction::RightToLeft => (&rel.rhs, &rel.lhs),
    }
}

fn relation(id: &str) -> Result<&'static Relation> {
    lookup(id).ok_or_else(|| Error::Index(format!("unknown relation `{id}`")))
}

/// Replaces the instantiated pattern at `step.position` by the other side.
///
/// Generators are matched exactly as written, so `X[3,1]` only matches a
/// reversed token.
pub fn apply_step(w: &Word, step: &DerivationStep) -> Result<Word> {
    let rel = relation(&step.relation)?;
    let (from, to) = sides(rel, step.direction);
    let (lhs, rhs) = rel.instantiate(&step.assignment, w.dim())?;
    let (pattern, replacement) = match step.direction {
        Direction::LeftToRight => (lhs, rhs),
        Direction::RightToLeft => (rhs, lhs),
    };
    debug_assert_eq!((pattern.len(), replacement.len()), (from.len(), to.len()));
    let pos = step.position;
    let gens = w.gens();
    if pos + pattern.len() > gens.len() || gens[pos..pos + pattern.len()] != *pattern.gens() {
        return Err(Error::Index(format!(
            "{} {} does not occur at position {pos}",
            rel.id, step.direction
        )));
    }
    let mut out = gens[..pos].to_vec();
    out.extend_from_slice(replacement.gens());
    out.extend_from_slice(&gens[pos + pattern.len()..]);
    Word::new(w.dim(), out)
}

/// Applies `steps` to `start` and compares the result with `target`.
/// Every intermediate word keeps the semantics of `start` (asserted in
/// debug builds).
pub fn check_derivation(start: &Word, steps: &[DerivationStep], target: &Word) -> Result<bool> {
    let initial = cfg!(debug_assertions).then(|| start.sem());
    let mut w = start.clone();
    for (i, step) in steps.iter().enumerate() {
        w = apply_step(&w, step).map_err(|e| Error::Step {
            step: i + 1,
            msg: format!("{step}: {e}"),
        })?;
        if let Some(m) = &initial {
            if w.sem() != *m {
                return Err(Error::Internal(format!(
                    "step {} changed the semantics",
                    i + 1
                )));
            }
        }
    }
    Ok(w == *target)
}

/// All steps with relation `rel` applicable to `w`.
///
/// Indices that occur only on the inserted side are filled with every
/// distinct choice from `1..=n`.
pub fn find_matches(w: &Word, rel: &Relation) -> Vec<DerivationStep> {
    let mut out = Vec::new();
    let gens = w.gens();
    for direction in [Direction::LeftToRight, Direction::RightToLeft] {
        let (pattern, _) = sides(rel, direction);
        if pattern.len() > gens.len() {
            continue;
        }
        for pos in 0..=gens.len() - pattern.len() {
            let mut asg = Assignment::new();
            let matched = pattern
                .iter()
                .zip(&gens[pos..])
                .all(|(s, g)| s.unify(g, &mut asg));
            if !matched {
                continue;
            }
            for full in extend(&asg, &rel.vars, w.dim()) {
                out.push(DerivationStep {
                    relation: rel.id.clone(),
                    direction,
                    assignment: full,
                    position: pos,
                });
            }
        }
    }
    out
}

fn extend(asg: &Assignment, vars: &[char], n: usize) -> Vec<Assignment> {
    let Some(&v) = vars.iter().find(|v| !asg.contains_key(v)) else {
        return vec![asg.clone()];
    };
    let mut out = Vec::new();
    for x in 1..=n {
        if asg.values().all(|&y| y != x) {
            let mut next = asg.clone();
            next.insert(v, x);
            out.extend(extend(&next, vars, n));
        }
    }
    out
}
