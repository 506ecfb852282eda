//! The relation catalog for `O_n(Z[1/√2])`, stored as schematic words.
//!
//! Each relation is a pair of words over formal indices (letters `a`..`f`).
//! Instantiating the letters with distinct concrete indices gives two words
//! with equal semantics.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, ParseError, Result};
use crate::linalg::Generator;
use crate::words::Word;

/// Formal-index assignment, e.g. `a=1,b=3`.
pub type Assignment = BTreeMap<char, usize>;

/// A generator over formal indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Schematic {
    Z(char),
    X(char, char),
    H(char, char),
}

impl Schematic {
    pub fn vars(&self) -> Vec<char> {
        match *self {
            Schematic::Z(a) => vec![a],
            Schematic::X(b, c) | Schematic::H(b, c) => vec![b, c],
        }
    }

    fn instantiate(&self, asg: &Assignment) -> Result<Generator> {
        let get = |v: char| {
            asg.get(&v)
                .copied()
                .ok_or_else(|| Error::Index(format!("index `{v}` is unassigned")))
        };
        Ok(match *self {
            Schematic::Z(a) => Generator::Z(get(a)?),
            Schematic::X(b, c) => Generator::X(get(b)?, get(c)?),
            Schematic::H(b, c) => Generator::H(get(b)?, get(c)?),
        })
    }

    /// Extends `asg` so that this schematic instantiates to `g`.
    pub(crate) fn unify(&self, g: &Generator, asg: &mut Assignment) -> bool {
        let pairs: Vec<(char, usize)> = match (*self, *g) {
            (Schematic::Z(a), Generator::Z(x)) => vec![(a, x)],
            (Schematic::X(b, c), Generator::X(x, y)) | (Schematic::H(b, c), Generator::H(x, y)) => {
                vec![(b, x), (c, y)]
            }
            _ => return false,
        };
        for (v, x) in pairs {
            match asg.get(&v) {
                Some(&bound) if bound != x => return false,
                Some(_) => {}
                None => {
                    if asg.values().any(|&other| other == x) {
                        return false;
                    }
                    asg.insert(v, x);
                }
            }
        }
        true
    }
}

impl fmt::Display for Schematic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Schematic::Z(a) => write!(f, "Z[{a}]"),
            Schematic::X(b, c) => write!(f, "X[{b},{c}]"),
            Schematic::H(b, c) => write!(f, "H[{b},{c}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub id: String,
    pub lhs: Vec<Schematic>,
    pub rhs: Vec<Schematic>,
    /// Formal indices in alphabetical order.
    pub vars: Vec<char>,
}

impl Relation {
    /// Builds a relation from schematic text such as `(H[a,b] H[c,d])^2`.
    pub fn parse(id: &str, lhs: &str, rhs: &str) -> Result<Relation, ParseError> {
        let lhs = parse_schematic(lhs)?;
        let rhs = parse_schematic(rhs)?;
        let mut vars: Vec<char> = lhs.iter().chain(&rhs).flat_map(Schematic::vars).collect();
        vars.sort_unstable();
        vars.dedup();
        Ok(Relation {
            id: id.to_string(),
            lhs,
            rhs,
            vars,
        })
    }

    /// Smallest ambient dimension admitting a distinct-index instantiation.
    pub fn min_dim(&self) -> usize {
        self.vars.len()
    }

    /// Checks that `asg` binds every formal index to distinct values in `1..=n`.
    pub fn check_assignment(&self, asg: &Assignment, n: usize) -> Result<()> {
        for v in &self.vars {
            match asg.get(v) {
                None => {
                    return Err(Error::Index(format!(
                        "{}: index `{v}` is unassigned",
                        self.id
                    )))
                }
                Some(&x) if x == 0 || x > n => {
                    return Err(Error::Index(format!(
                        "{}: {v}={x} outside 1..={n}",
                        self.id
                    )))
                }
                Some(_) => {}
            }
        }
        let mut values: Vec<usize> = self.vars.iter().map(|v| asg[v]).collect();
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Index(format!(
                "{}: indices must be distinct",
                self.id
            )));
        }
        Ok(())
    }

    fn side(&self, side: &[Schematic], asg: &Assignment, n: usize) -> Result<Word> {
        self.check_assignment(asg, n)?;
        let gens = side
            .iter()
            .map(|s| s.instantiate(asg))
            .collect::<Result<Vec<_>>>()?;
        Word::new(n, gens)
    }

    /// Both sides instantiated over `G_n`.
    pub fn instantiate(&self, asg: &Assignment, n: usize) -> Result<(Word, Word)> {
        Ok((self.side(&self.lhs, asg, n)?, self.side(&self.rhs, asg, n)?))
    }

    /// Every injective assignment of the formal indices into `1..=n`.
    pub fn assignments(&self, n: usize) -> Vec<Assignment> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.vars.len());
        fn rec(vars: &[char], n: usize, current: &mut Vec<usize>, out: &mut Vec<Assignment>) {
            if current.len() == vars.len() {
                out.push(vars.iter().copied().zip(current.iter().copied()).collect());
                return;
            }
            for x in 1..=n {
                if !current.contains(&x) {
                    current.push(x);
                    rec(vars, n, current, out);
                    current.pop();
                }
            }
        }
        rec(&self.vars, n, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[Schematic]| {
            if s.is_empty() {
                "ε".to_string()
            } else {
                s.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        write!(f, "({}) {} ≈ {}", self.id, side(&self.lhs), side(&self.rhs))
    }
}

fn parse_schematic(text: &str) -> Result<Vec<Schematic>, ParseError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if let Some(inner) = rest.strip_prefix('(') {
            let close = inner
                .find(')')
                .ok_or_else(|| ParseError::new(format!("unbalanced `(` in `{text}`")))?;
            let body = parse_schematic(&inner[..close])?;
            let after = &inner[close + 1..];
            let (times, tail) = match after.strip_prefix('^') {
                Some(p) => {
                    let end = p.find(|c: char| !c.is_ascii_digit()).unwrap_or(p.len());
                    let k = p[..end]
                        .parse::<usize>()
                        .map_err(|_| ParseError::new(format!("bad exponent in `{text}`")))?;
                    (k, &p[end..])
                }
                None => (1, after),
            };
            for _ in 0..times {
                out.extend_from_slice(&body);
            }
            rest = tail.trim_start();
            continue;
        }
        let end = rest
            .find(']')
            .ok_or_else(|| ParseError::new(format!("unterminated generator in `{text}`")))?;
        let tok = &rest[..=end];
        let bad = || ParseError::new(format!("invalid schematic generator `{tok}`"));
        let (head, args) = tok.split_at(tok.find('[').ok_or_else(bad)?);
        let vars: Vec<char> = args[1..args.len() - 1]
            .split(',')
            .map(|v| {
                let mut cs = v.trim().chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) if c.is_ascii_lowercase() => Ok(c),
                    _ => Err(bad()),
                }
            })
            .collect::<Result<_, _>>()?;
        out.push(match (head, vars.as_slice()) {
            ("Z", [a]) => Schematic::Z(*a),
            ("X", [b, c]) if b != c => Schematic::X(*b, *c),
            ("H", [b, c]) if b != c => Schematic::H(*b, *c),
            _ => return Err(bad()),
        });
        rest = rest[end + 1..].trim_start();
    }
    Ok(out)
}

const CATALOG: &[(&str, &str, &str)] = &[
    ("a1", "Z[a] Z[a]", ""),
    ("a2", "X[a,b] X[a,b]", ""),
    ("a3", "H[a,b] H[a,b]", ""),
    ("b1", "Z[a] Z[b]", "Z[b] Z[a]"),
    ("b2", "Z[a] X[b,c]", "X[b,c] Z[a]"),
    ("b3", "X[a,b] X[c,d]", "X[c,d] X[a,b]"),
    ("b4", "Z[a] H[b,c]", "H[b,c] Z[a]"),
    ("b5", "X[a,b] H[c,d]", "H[c,d] X[a,b]"),
    ("b6", "H[a,b] H[c,d]", "H[c,d] H[a,b]"),
    ("c1", "Z[a] X[a,b]", "X[a,b] Z[b]"),
    ("c2", "X[b,c] X[a,b]", "X[a,b] X[a,c]"),
    ("c3", "X[a,c] X[b,c]", "X[b,c] X[a,b]"),
    ("c4", "H[b,c] X[a,b]", "X[a,b] H[a,c]"),
    ("c5", "H[a,c] X[b,c]", "X[b,c] H[a,b]"),
    ("d1", "Z[a] Z[b] H[a,b]", "H[a,b] Z[a] Z[b]"),
    ("d2", "Z[b] H[a,b]", "H[a,b] X[a,b]"),
    ("d3", "(H[c,d] H[a,c] H[b,d])^4", "H[a,b] H[c,d]"),
    (
        "d4",
        "(H[a,c] H[b,d] H[a,b] H[a,c] H[b,d] X[c,e] X[d,f])^3",
        "H[c,e] H[d,f] H[e,f] H[c,e] H[d,f] X[c,e] X[d,f]",
    ),
    ("e1", "X[c,b]", "X[b,c]"),
    ("e2", "H[c,b]", "X[b,c] H[b,c] X[b,c]"),
    ("f1", "(H[a,b] H[c,d] H[a,c] H[b,d])^2", ""),
    ("f2", "(H[a,c] H[b,d] H[a,d] H[b,c])^2", "X[a,b] X[c,d]"),
];

/// The full relation catalog, in id order.
pub fn catalog() -> &'static [Relation] {
    static RELATIONS: OnceLock<Vec<Relation>> = OnceLock::new();
    RELATIONS.get_or_init(|| {
        CATALOG
            .iter()
            .map(|(id, l, r)| Relation::parse(id, l, r).expect("catalog entries parse"))
            .collect()
    })
}

pub(crate) fn lookup(id: &str) -> Option<&'static Relation> {
    catalog().iter().find(|r| r.id == id)
}

/// `⟦lhs⟧ = ⟦rhs⟧` for one instantiation over `G_n`.
pub fn verify_relation(rel: &Relation, asg: &Assignment, n: usize) -> Result<bool> {
    let (l, r) = rel.instantiate(asg, n)?;
    Ok(l.sem() == r.sem())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationStatus {
    Pass {
        checked: usize,
    },
    Fail {
        checked: usize,
        failed: usize,
        first: Assignment,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub id: String,
    pub status: RelationStatus,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        !matches!(self.status, RelationStatus::Fail { .. })
    }
}

fn format_assignment(a: &Assignment) -> String {
    a.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            RelationStatus::Pass { checked } => write!(f, "{} PASS {checked}", self.id),
            RelationStatus::Fail {
                checked,
                failed,
                first,
            } => write!(
                f,
                "{} FAIL {failed}/{checked} first at {}",
                self.id,
                format_assignment(first)
            ),
            RelationStatus::Skipped { reason } => write!(f, "{} SKIPPED {reason}", self.id),
        }
    }
}

/// Verifies each relation over every injective assignment into `1..=n`,
/// stopping after `max_assignments` per relation when given.
pub fn verify_catalog(
    relations: &[Relation],
    n: usize,
    max_assignments: Option<usize>,
) -> Vec<RelationReport> {
    let mut reports: Vec<RelationReport> = relations
        .iter()
        .map(|rel| {
            let status = if rel.min_dim() > n {
                RelationStatus::Skipped {
                    reason: format!("needs n >= {}", rel.min_dim()),
                }
            } else {
                let mut checked = 0;
                let mut failed = 0;
                let mut first = None;
                let limit = max_assignments.unwrap_or(usize::MAX);
                for asg in rel.assignments(n).into_iter().take(limit) {
                    checked += 1;
                    if !verify_relation(rel, &asg, n).unwrap_or(false) {
                        failed += 1;
                        first.get_or_insert(asg);
                    }
                }
                match first {
                    None => RelationStatus::Pass { checked },
                    Some(first) => RelationStatus::Fail {
                        checked,
                        failed,
                        first,
                    },
                }
            };
            RelationReport {
                id: rel.id.clone(),
                status,
            }
        })
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}
