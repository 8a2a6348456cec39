//! Looseness of unit-sphere-bundle projections of oriented plane bundles,
//! and the tensor-power family over complex projective space.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::abelian::in_gcd_image;
use crate::error::{Error, Result};
use crate::verdict::{Outcome, RuleApplication, RuleId, Verdict};

const PLANE_CITE: &str = "For an oriented plane bundle xi over a closed connected manifold N, \
the unit-sphere-bundle projection is loose exactly when chi(N) lies in the image of the Euler \
class e(xi) on H_2(N; Z) and chi(N) is even. The even values hit on H_2 are hit on \
ker(w_2(TN)) as well, since e(xi) reduces to a second Stiefel-Whitney class mod 2; classes in \
that kernel are the ones a framed deformation can realize. Evaluations against torsion \
generators vanish integrally, so only the listed free evaluations matter.";

const PLANE_DIM2_CITE: &str = " In target dimension 2 the same count settles the remaining \
skeleton: pi_2(S^1) = 0, so a section found over the 2-skeleton extends to all of the total \
space.";

const CP_CITE: &str = "Over CP(q) with q > 1, take xi the t-th tensor power of the canonical \
complex line bundle: e(xi) evaluates to t on the standard generator of H_2(CP(q); Z) = Z, and \
chi(CP(q)) = q + 1. The plane-bundle criterion then reads: loose exactly when t divides q + 1 \
and q is odd (q + 1 even).";

/// Input data for the plane-bundle criterion. `euler_evals` lists the values
/// of the Euler class on free generators of `H_2(N; Z)`; `torsion_w2` lists
/// the `w_2` bits on torsion generators (they never enter the decision:
/// integral evaluations against torsion vanish — the bits are echoed in the
/// trace only). `dim_n` likewise only shapes the explanatory text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneBundleInput {
    pub chi_n: BigInt,
    pub euler_evals: Vec<BigInt>,
    pub torsion_w2: Vec<bool>,
    pub dim_n: i64,
}

impl PlaneBundleInput {
    pub fn new(
        chi_n: BigInt,
        euler_evals: Vec<BigInt>,
        torsion_w2: Vec<bool>,
        dim_n: i64,
    ) -> Result<Self> {
        if dim_n < 1 {
            return Err(Error::Domain(format!(
                "the base manifold must have dimension >= 1; got {dim_n}"
            )));
        }
        Ok(PlaneBundleInput { chi_n, euler_evals, torsion_w2, dim_n })
    }
}

/// Decide looseness of the sphere-bundle projection of an oriented plane
/// bundle. This criterion is two-sided: the answer is never `Unknown`.
pub fn decide_plane_bundle(input: &PlaneBundleInput) -> Verdict {
    let gcd = input.euler_evals.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
    let in_image = in_gcd_image(&input.euler_evals, &input.chi_n);
    let even = input.chi_n.is_even();
    let evals = render_list(&input.euler_evals);
    let w2_bits =
        input.torsion_w2.iter().map(|&b| if b { "1" } else { "0" }).collect::<Vec<_>>().join(", ");

    let mut trace = vec![RuleApplication::note(
        RuleId::PlumbingInput,
        "Oriented plane bundle over a closed manifold; torsion w_2 bits are recorded for \
         reference but integral Euler evaluations against torsion generators are zero.",
    )
    .with("chi(N)", &input.chi_n)
    .with("e(xi) on free generators", &evals)
    .with(
        "w_2 on torsion generators",
        if w2_bits.is_empty() { "none".to_string() } else { format!("[{w2_bits}]") },
    )
    .with("dim N", input.dim_n)];

    let mut citation = PLANE_CITE.to_string();
    if input.dim_n == 2 {
        citation.push_str(PLANE_DIM2_CITE);
    }
    let loose = in_image && even;
    trace.push(
        RuleApplication::cited(RuleId::BundlePlaneCriterion, citation)
            .with("gcd of evaluations", &gcd)
            .with("chi(N) in image", in_image)
            .with("chi(N) even", even),
    );
    let outcome = if loose { Outcome::Loose } else { Outcome::NotLoose };
    Verdict::new(outcome, trace)
}

/// Decide looseness for the t-th tensor power of the canonical line bundle
/// over `CP(q)`, `q > 1`, `t >= 1`. Decides twice — once by the direct
/// divisibility-and-parity criterion, once by delegating to
/// [`decide_plane_bundle`] — and the trace shows both.
pub fn decide_cp_tensor(q: &BigInt, power: &BigInt) -> Result<Verdict> {
    if q <= &BigInt::one() {
        return Err(Error::Domain(format!("CP(q) needs complex dimension q > 1; got q = {q}")));
    }
    if power < &BigInt::one() {
        return Err(Error::Domain(format!("the tensor power must be >= 1; got {power}")));
    }
    let chi: BigInt = q + 1;
    let divides = (&chi % power).is_zero();
    let q_odd = q.is_odd();
    let direct = divides && q_odd;

    let dim_n: i64 = (q * BigInt::from(2))
        .try_into()
        .map_err(|_| Error::Domain("2q overflows the supported dimension range".into()))?;
    let input = PlaneBundleInput::new(chi.clone(), vec![power.clone()], Vec::new(), dim_n)?;
    let delegated = decide_plane_bundle(&input);
    debug_assert_eq!(delegated.outcome == Outcome::Loose, direct);

    let mut trace = vec![
        RuleApplication::cited(RuleId::BundleCpTensor, CP_CITE)
            .with("q", q)
            .with("t (tensor power)", power)
            .with("chi(CP(q)) = q + 1", &chi)
            .with("t divides q + 1", divides)
            .with("q odd", q_odd)
            .with("direct criterion", if direct { "Loose" } else { "NotLoose" }),
        RuleApplication::note(
            RuleId::PlumbingDelegation,
            "Cross-check: hand the same bundle to the general plane-bundle criterion \
             (chi(N) = q + 1 since CP(q) has one cell in each even dimension; e(xi) evaluates \
             to t on the generator; dim N = 2q).",
        )
        .with("chi(N)", &chi)
        .with("e(xi) evaluations", render_list(&input.euler_evals))
        .with("dim N", dim_n),
    ];
    trace.extend(delegated.trace);
    Ok(Verdict::new(delegated.outcome, trace))
}

fn render_list(values: &[BigInt]) -> String {
    if values.is_empty() {
        return "none".to_string();
    }
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}
