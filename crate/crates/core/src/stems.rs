//! Knowledge base of framed-bordism facts: stable stems and orders of
//! invariantly framed rotation groups.
//!
//! Group structures are never hard-coded in decision logic; they are read
//! from a line-oriented data file (see `data/stems.table` for the format and
//! the bundled facts), so every recorded group comes with a source string
//! and lookups outside the table fail loudly instead of guessing. The only
//! facts applied in code are two parametric divisibility laws valid for all
//! k: `24 * [SO(k)] = 0`, and `2 * [SO(k)] = 0` for even k (Ossa, Topology
//! 21 (1982), p. 315; Becker and Schultz, Springer LNM 657, 4.7).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::abelian::{FgAbGroup, Order, OrderKnowledge};
use crate::error::{Error, Result};

const BUNDLED_TABLE: &str = include_str!("../data/stems.table");

/// A recorded stable stem: `pi^S_degree` with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemEntry {
    pub degree: i64,
    pub group: FgAbGroup,
    pub source: String,
}

/// Recorded knowledge about the order of `[SO(k)]` in the stable
/// `k(k-1)/2`-stem, with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoClassFact {
    pub k: i64,
    pub order: OrderKnowledge,
    pub source: String,
}

/// Euler number of a homogeneous space `B/G`, as input to the framing
/// constraint derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousConstraint {
    pub euler_number: BigInt,
    pub description: String,
}

impl HomogeneousConstraint {
    /// The order constraint this Euler number imposes on `[G]`, if any.
    pub fn order_constraint(&self) -> Option<OrderKnowledge> {
        becker_schultz_constraint(&self.euler_number)
    }
}

/// Parsed, audited knowledge base. Loaded once, immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemTable {
    stems: BTreeMap<i64, StemEntry>,
    so_classes: BTreeMap<i64, SoClassFact>,
}

impl StemTable {
    /// Parse and audit a table. This is the only way to obtain one, so every
    /// live table is internally consistent.
    pub fn load(text: &str) -> Result<Self> {
        let table = Self::parse(text)?;
        table.audit()?;
        Ok(table)
    }

    /// The table compiled into the crate.
    pub fn bundled() -> &'static StemTable {
        static BUNDLED: OnceLock<StemTable> = OnceLock::new();
        BUNDLED.get_or_init(|| {
            StemTable::load(BUNDLED_TABLE).expect("the bundled stems table is valid")
        })
    }

    fn parse(text: &str) -> Result<Self> {
        let mut stems = BTreeMap::new();
        let mut so_classes = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, source) = split_source(line, lineno)?;
            let tokens: Vec<&str> = head.split_whitespace().collect();
            match tokens.as_slice() {
                ["stem", degree, spec] => {
                    let degree = parse_int::<i64>(degree, lineno, "stem degree")?;
                    if degree < 0 {
                        return Err(Error::table(lineno, "stem degree must be >= 0"));
                    }
                    let group = parse_group(spec, lineno)?;
                    let entry = StemEntry { degree, group, source };
                    if stems.insert(degree, entry).is_some() {
                        return Err(Error::table(lineno, format!("duplicate entry for stem {degree}")));
                    }
                }
                ["soclass", k, kind, n] => {
                    let k = parse_int::<i64>(k, lineno, "soclass index")?;
                    if k < 2 {
                        return Err(Error::table(lineno, "soclass index must be >= 2 (SO(0) and SO(1) carry no framing data)"));
                    }
                    let n = parse_int::<BigUint>(n, lineno, "order")?;
                    if n.is_zero() {
                        return Err(Error::table(lineno, "orders are positive"));
                    }
                    let order = match *kind {
                        "exact" => OrderKnowledge::Exact(n),
                        "divides" => OrderKnowledge::Divides(n),
                        other => {
                            return Err(Error::table(
                                lineno,
                                format!("expected 'exact' or 'divides', found {other:?}"),
                            ))
                        }
                    };
                    let fact = SoClassFact { k, order, source };
                    if so_classes.insert(k, fact).is_some() {
                        return Err(Error::table(lineno, format!("duplicate entry for SO({k})")));
                    }
                }
                _ => {
                    return Err(Error::table(
                        lineno,
                        "expected 'stem <j> <orders> \"source\"' or 'soclass <k> exact|divides <n> \"source\"'",
                    ))
                }
            }
        }
        Ok(StemTable { stems, so_classes })
    }

    /// Consistency audit: every recorded `[SO(k)]` fact must refine cleanly
    /// against the parametric divisibility laws (24 kills every class, 2
    /// kills the even-k classes), and an exact order must divide the exponent
    /// of the recorded ambient stem when that stem is present.
    pub fn audit(&self) -> Result<()> {
        for fact in self.so_classes.values() {
            let law = parity_divisibility_law(fact.k);
            refine(&fact.order, &law).map_err(|e| {
                let detail = match e {
                    Error::Inconsistent(msg) => msg,
                    other => other.to_string(),
                };
                Error::Inconsistent(format!("[SO({})] ({}): {detail}", fact.k, fact.source))
            })?;
            if let OrderKnowledge::Exact(n) = &fact.order {
                let degree = fact.k * (fact.k - 1) / 2;
                if let Some(group) = self.stem_group(degree) {
                    if let Order::Finite(exponent) = group.exponent() {
                        if !(&exponent % n).is_zero() {
                            return Err(Error::Inconsistent(format!(
                                "[SO({})] has recorded order {n}, which does not divide the exponent {exponent} of stem {degree} ({})",
                                fact.k, group
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The stable `j`-stem, if recorded. Never guesses.
    pub fn stem_group(&self, j: i64) -> Option<&FgAbGroup> {
        self.stems.get(&j).map(|e| &e.group)
    }

    pub fn stem_entry(&self, j: i64) -> Option<&StemEntry> {
        self.stems.get(&j)
    }

    pub fn stems(&self) -> impl Iterator<Item = &StemEntry> {
        self.stems.values()
    }

    pub fn so_class_fact(&self, k: i64) -> Option<&SoClassFact> {
        self.so_classes.get(&k)
    }

    pub fn stem_count(&self) -> usize {
        self.stems.len()
    }

    pub fn so_class_count(&self) -> usize {
        self.so_classes.len()
    }

    /// Best knowledge about the order of `[SO(k)]`: the recorded fact for
    /// this k, refined against the always-valid divisibility laws. Without a
    /// recorded fact the laws alone answer (`divides 24`, or `divides 2` for
    /// even k) — never an unsourced exact claim.
    pub fn so_class_order(&self, k: i64) -> Result<OrderKnowledge> {
        if k < 2 {
            return Err(Error::Domain(format!(
                "the invariantly framed SO({k}) carries no order data; k must be >= 2"
            )));
        }
        let law = parity_divisibility_law(k);
        match self.so_classes.get(&k) {
            Some(fact) => refine(&fact.order, &law)
                .map_err(|e| Error::Inconsistent(format!("[SO({k})] ({}): {e}", fact.source))),
            None => Ok(law),
        }
    }
}

/// `24 * [SO(k)] = 0` for every k >= 2, and `2 * [SO(k)] = 0` for even k.
fn parity_divisibility_law(k: i64) -> OrderKnowledge {
    if k % 2 == 0 {
        OrderKnowledge::divides(2)
    } else {
        OrderKnowledge::divides(24)
    }
}

/// Constraint a homogeneous space imposes on the framed class of its fibre:
/// `chi(B/G) * [G] = 0` (Becker and Schultz, Springer LNM 657, 4.5), so a
/// nonzero Euler number `chi` bounds the order of `[G]` by `|chi|`. A zero
/// Euler number says nothing.
pub fn becker_schultz_constraint(chi: &BigInt) -> Option<OrderKnowledge> {
    if chi.is_zero() {
        None
    } else {
        Some(OrderKnowledge::Divides(chi.abs().magnitude().clone()))
    }
}

/// Combine two order facts about the same class into the strongest
/// consistent one. An exact order beats a divisibility bound it divides; two
/// bounds combine into their gcd; contradictions are reported, not absorbed.
pub fn refine(a: &OrderKnowledge, b: &OrderKnowledge) -> Result<OrderKnowledge> {
    use OrderKnowledge::{Divides, Exact};
    match (a, b) {
        (Exact(n), Exact(m)) => {
            if n == m {
                Ok(Exact(n.clone()))
            } else {
                Err(Error::Inconsistent(format!("order exactly {n} vs exactly {m}")))
            }
        }
        (Exact(n), Divides(d)) | (Divides(d), Exact(n)) => {
            if (d % n).is_zero() {
                Ok(Exact(n.clone()))
            } else {
                Err(Error::Inconsistent(format!(
                    "order exactly {n} contradicts the bound 'divides {d}'"
                )))
            }
        }
        (Divides(x), Divides(y)) => Ok(Divides(x.gcd(y))),
    }
}

fn split_source(line: &str, lineno: usize) -> Result<(&str, String)> {
    let open = line
        .find('"')
        .ok_or_else(|| Error::table(lineno, "every fact needs a quoted source string"))?;
    let rest = &line[open + 1..];
    if !rest.ends_with('"') || rest.len() < 2 {
        return Err(Error::table(lineno, "unterminated source string"));
    }
    let source = &rest[..rest.len() - 1];
    if source.contains('"') {
        return Err(Error::table(lineno, "source strings may not contain '\"'"));
    }
    if source.trim().is_empty() {
        return Err(Error::table(lineno, "source strings must be nonempty"));
    }
    Ok((line[..open].trim(), source.to_string()))
}

fn parse_int<T>(token: &str, lineno: usize, what: &str) -> Result<T>
where
    T: std::str::FromStr,
    T::Err: fmt::Display,
{
    token.parse().map_err(|e| Error::table(lineno, format!("bad {what} {token:?}: {e}")))
}

fn parse_group(spec: &str, lineno: usize) -> Result<FgAbGroup> {
    if spec == "trivial" {
        return Ok(FgAbGroup::trivial());
    }
    let mut orders = Vec::new();
    for part in spec.split(',') {
        orders.push(parse_int::<BigUint>(part, lineno, "cyclic order")?);
    }
    FgAbGroup::new(orders).map_err(|e| Error::table(lineno, e.to_string()))
}
