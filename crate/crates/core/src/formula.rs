//! (2,2)-3SAT instances: 3CNF formulas in which every clause has three
//! distinct variables and every variable occurs exactly twice unnegated
//! and twice negated. Includes a strict parser, a brute-force
//! satisfiability oracle, and a seeded instance generator.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::FormulaError;

/// A literal: variable id (0-based) plus polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// A validated (2,2)-3SAT instance. Clause count is always
/// `4 * variable_count / 3` by slot arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula223 {
    variable_count: usize,
    clauses: Vec<[Literal; 3]>,
}

impl Formula223 {
    pub fn new(variable_count: usize, clauses: Vec<[Literal; 3]>) -> Result<Formula223, FormulaError> {
        let f = Formula223 { variable_count, clauses };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<(), FormulaError> {
        let n = self.variable_count;
        if n % 3 != 0 {
            return Err(FormulaError::ConstraintViolation(format!(
                "variable count {n} breaks slot arithmetic (must be divisible by 3)"
            )));
        }
        if self.clauses.len() * 3 != 4 * n {
            return Err(FormulaError::ConstraintViolation(format!(
                "clause count {} must be 4n/3 = {}",
                self.clauses.len(),
                4 * n / 3
            )));
        }
        let mut pos = vec![0usize; n];
        let mut neg = vec![0usize; n];
        for (ci, clause) in self.clauses.iter().enumerate() {
            let vars: HashSet<usize> = clause.iter().map(|l| l.var).collect();
            if vars.len() != 3 {
                return Err(FormulaError::ConstraintViolation(format!(
                    "clause {ci} repeats a variable"
                )));
            }
            for l in clause {
                if l.var >= n {
                    return Err(FormulaError::ConstraintViolation(format!(
                        "clause {ci} references variable {} out of range",
                        l.var + 1
                    )));
                }
                if l.positive {
                    pos[l.var] += 1;
                } else {
                    neg[l.var] += 1;
                }
            }
        }
        for v in 0..n {
            if pos[v] != 2 || neg[v] != 2 {
                return Err(FormulaError::ConstraintViolation(format!(
                    "variable {} occurs {}+/{}- (needs exactly 2+/2-)",
                    v + 1,
                    pos[v],
                    neg[v]
                )));
            }
        }
        Ok(())
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variable_count
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|l| l.satisfied_by(assignment)))
    }

    /// Canonical form for deduplication: sorted literals within clauses,
    /// sorted clause list.
    pub fn canonical(&self) -> Vec<[Literal; 3]> {
        let mut cs: Vec<[Literal; 3]> = self
            .clauses
            .iter()
            .map(|c| {
                let mut c = *c;
                c.sort();
                c
            })
            .collect();
        cs.sort();
        cs
    }
}

impl fmt::Display for Formula223 {
    /// Text format: header `p 223sat <n> <m>`, then one clause per line
    /// as three signed 1-based integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p 223sat {} {}", self.variable_count, self.clauses.len())?;
        for clause in &self.clauses {
            let lits: Vec<String> = clause
                .iter()
                .map(|l| {
                    let v = (l.var + 1) as i64;
                    if l.positive { v.to_string() } else { (-v).to_string() }
                })
                .collect();
            writeln!(f, "{}", lits.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the `p 223sat n m` text format. Lines starting with `c` or `#`
/// are comments; a trailing DIMACS-style `0` per clause line is accepted.
pub fn parse_formula(text: &str) -> Result<Formula223, FormulaError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(FormulaError::Syntax { line: lineno, msg: "duplicate header".into() });
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 4 || toks[1] != "223sat" {
                return Err(FormulaError::Syntax {
                    line: lineno,
                    msg: format!("expected `p 223sat <n> <m>`, got {raw:?}"),
                });
            }
            let n = toks[2].parse().map_err(|_| FormulaError::Syntax {
                line: lineno,
                msg: "bad variable count".into(),
            })?;
            let m = toks[3].parse().map_err(|_| FormulaError::Syntax {
                line: lineno,
                msg: "bad clause count".into(),
            })?;
            header = Some((n, m));
            continue;
        }
        let mut lits = Vec::new();
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| FormulaError::Syntax {
                line: lineno,
                msg: format!("bad literal {tok:?}"),
            })?;
            if x == 0 {
                break; // optional DIMACS terminator
            }
            lits.push(Literal { var: (x.unsigned_abs() as usize) - 1, positive: x > 0 });
        }
        if lits.len() != 3 {
            return Err(FormulaError::Syntax {
                line: lineno,
                msg: format!("clause needs exactly 3 literals, got {}", lits.len()),
            });
        }
        clauses.push([lits[0], lits[1], lits[2]]);
    }
    let (n, m) = header.ok_or(FormulaError::Syntax { line: 0, msg: "missing header".into() })?;
    if clauses.len() != m {
        return Err(FormulaError::Syntax {
            line: 0,
            msg: format!("header promises {m} clauses, found {}", clauses.len()),
        });
    }
    Formula223::new(n, clauses)
}

/// Brute force over all 2^n assignments; returns a satisfying assignment
/// or None. The empty formula is satisfiable by the empty assignment.
pub fn sat_oracle(phi: &Formula223) -> Option<Vec<bool>> {
    let n = phi.variable_count();
    for mask in 0u64..(1u64 << n) {
        let assignment: Vec<bool> = (0..n).map(|v| mask & (1 << v) != 0).collect();
        if phi.is_satisfied_by(&assignment) {
            return Some(assignment);
        }
    }
    None
}

/// Deterministic pseudorandom stream of valid (2,2)-3SAT instances on `n`
/// variables (n divisible by 3), deduplicated by canonical form.
pub struct FormulaGenerator {
    n: usize,
    rng: ChaCha8Rng,
    seen: HashSet<Vec<[Literal; 3]>>,
}

pub fn generate_formulas(n: usize, seed: u64) -> Result<FormulaGenerator, FormulaError> {
    if n % 3 != 0 {
        return Err(FormulaError::NotDivisibleByThree(n));
    }
    Ok(FormulaGenerator { n, rng: ChaCha8Rng::seed_from_u64(seed), seen: HashSet::new() })
}

impl Iterator for FormulaGenerator {
    type Item = Formula223;

    /// Occurrence-constrained shuffling: lay out the 4n literal tokens
    /// (each variable twice positive, twice negative), shuffle, cut into
    /// clauses, and retry until no clause repeats a variable.
    fn next(&mut self) -> Option<Formula223> {
        if self.n == 0 {
            return None;
        }
        loop {
            let mut tokens: Vec<Literal> = Vec::with_capacity(4 * self.n);
            for v in 0..self.n {
                for positive in [true, false] {
                    tokens.push(Literal { var: v, positive });
                    tokens.push(Literal { var: v, positive });
                }
            }
            tokens.shuffle(&mut self.rng);
            let ok = tokens
                .chunks(3)
                .all(|c| c[0].var != c[1].var && c[0].var != c[2].var && c[1].var != c[2].var);
            if !ok {
                continue;
            }
            let clauses: Vec<[Literal; 3]> =
                tokens.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
            let phi = Formula223::new(self.n, clauses).expect("generator output is valid");
            if self.seen.insert(phi.canonical()) {
                return Some(phi);
            }
        }
    }
}
