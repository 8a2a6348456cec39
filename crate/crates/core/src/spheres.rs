//! Looseness of maps out of spheres, `f: S^m -> N^n`, tested through the
//! stable class of `f` in the `(m-n)`-stem.
//!
//! The obstruction is the homomorphism `[f] -> chi(N) * [f]` into the stable
//! stem (for `N = S^n` this is `(1 + (-1)^n)` times stabilization). A nonzero
//! value always forbids looseness; a zero value is conclusive only in the
//! stable range `m < 2n - 2`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::GroupElement;
use crate::error::{Error, Result};
use crate::stems::StemTable;
use crate::verdict::{Outcome, RuleApplication, RuleId, Verdict};

const CIRCLE_CITE: &str = "A 1-dimensional target carries a nowhere-zero vector field, and \
flowing any map along it separates the map from itself; the obstruction homomorphism out of \
pi_m is identically zero for n = 1.";

const NONZERO_CITE: &str = "A homotopy from f to a map with no self-coincidences bounds the \
framed coincidence data, so looseness forces chi(N) * [f] = 0 in the stable (m-n)-stem; a \
nonzero value is a complete obstruction in every dimension range.";

const KERNEL_CITE: &str = "In the stable range m < 2n - 2 the kernel criterion is two-sided: \
chi(N) * [f] = 0 already produces the deformation pushing f off itself. For N = S^n the \
homomorphism is (1 + (-1)^n) times stabilization, so for odd n every map out of S^m is loose \
here.";

const UNSTABLE_CITE: &str = "Outside the stable range (m >= 2n - 2) vanishing of \
chi(N) * [f] is necessary but not known to be sufficient; nothing decisive follows from it.";

/// A query about `f: S^m -> N^n`, pinned to a stem table: the stable class
/// of `f` lives in the recorded `(m-n)`-stem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereMapInput {
    pub m: i64,
    pub n: i64,
    pub stable_class: GroupElement,
    pub chi_n: BigInt,
}

impl SphereMapInput {
    /// Query for a sphere target `N = S^n`; its Euler characteristic
    /// `1 + (-1)^n` is filled in.
    pub fn for_sphere_target(
        table: &StemTable,
        m: i64,
        n: i64,
        coords: Vec<BigInt>,
    ) -> Result<Self> {
        let chi = if n % 2 == 0 { BigInt::from(2) } else { BigInt::zero() };
        Self::with_target_data(table, m, n, coords, chi)
    }

    /// Query for a general closed target of dimension n with the given Euler
    /// characteristic.
    pub fn with_target_data(
        table: &StemTable,
        m: i64,
        n: i64,
        coords: Vec<BigInt>,
        chi_n: BigInt,
    ) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain(format!("the target dimension must be >= 1; got n = {n}")));
        }
        if m < n {
            return Err(Error::Domain(format!(
                "needs m >= n (the stable class lives in the (m-n)-stem); got m = {m}, n = {n}"
            )));
        }
        let stem = m - n;
        let group = table.stem_group(stem).ok_or(Error::MissingStem(stem))?;
        let stable_class = group.element(coords)?;
        Ok(SphereMapInput { m, n, stable_class, chi_n })
    }

    pub fn stem(&self) -> i64 {
        self.m - self.n
    }

    /// `m < 2n - 2`.
    pub fn stable_range(&self) -> bool {
        self.m < 2 * self.n - 2
    }
}

/// The obstruction class `chi(N) * [f]` in the `(m-n)`-stem; identically
/// zero when `n = 1`.
pub fn omega_class(input: &SphereMapInput) -> GroupElement {
    if input.n == 1 {
        input.stable_class.group().zero()
    } else {
        input.stable_class.scale(&input.chi_n)
    }
}

/// Decide looseness of a map `S^m -> N^n` from its stable class.
pub fn decide_sphere_map(input: &SphereMapInput) -> Verdict {
    let stem = input.stem();
    let mut trace = vec![RuleApplication::note(
        RuleId::PlumbingInput,
        "Map out of a sphere, identified by its stable class.",
    )
    .with("m", input.m)
    .with("n", input.n)
    .with("stem (m - n)", stem)
    .with("stem group", input.stable_class.group())
    .with("stable class", render_coords(&input.stable_class))
    .with("chi(N)", &input.chi_n)
    .with("stable range (m < 2n-2)", input.stable_range())];

    if input.m > 2 * input.n - 2 {
        trace.push(RuleApplication::note(
            RuleId::PlumbingUnstableNote,
            "m exceeds 2n - 2: the supplied stable class is taken at face value; \
             stabilization may have lost unstable information about f.",
        ));
    }

    if input.n == 1 {
        trace.push(
            RuleApplication::cited(RuleId::SphereCircleTarget, CIRCLE_CITE).with("omega", "0"),
        );
        return Verdict::new(Outcome::Loose, trace);
    }

    let omega = omega_class(input);
    let vanishes = omega.is_zero();
    let omega_str = render_coords(&omega);

    let (rule, cite, outcome) = if !vanishes {
        (RuleId::SphereObstructionNonzero, NONZERO_CITE, Outcome::NotLoose)
    } else if input.stable_range() {
        (RuleId::SphereKernelStable, KERNEL_CITE, Outcome::Loose)
    } else {
        (RuleId::SphereOutsideStableRange, UNSTABLE_CITE, Outcome::Unknown)
    };
    let mut step = RuleApplication::cited(rule, cite)
        .with("omega = chi(N) * [f]", omega_str)
        .with("omega vanishes", vanishes);
    if outcome == Outcome::Unknown {
        step = step.with("reason", "obstruction vanishes, outside the stable range");
    }
    trace.push(step);
    Verdict::new(outcome, trace)
}

fn render_coords(element: &GroupElement) -> String {
    let parts: Vec<String> = element.coords().iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}
