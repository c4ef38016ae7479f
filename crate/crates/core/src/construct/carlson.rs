use super::decompose::{decompose, DecomposeConfig, Decomposition};
use crate::cohomology::{support_variety, VarietyConfig, VarietyIdeal};
use crate::error::{Error, Result};
use crate::resolve::ModulePresentation;

/// One summand of the decomposition and the side it was assigned to.
#[derive(Clone, Debug)]
pub struct AssignedSummand {
    pub module: ModulePresentation,
    pub variety: VarietyIdeal,
    /// 1 or 2.
    pub group: u8,
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct CarlsonReport {
    pub variety: VarietyIdeal,
    pub summands: Vec<AssignedSummand>,
    /// Direct sums of the summands per group, `None` when a group is empty.
    pub c1: Option<ModulePresentation>,
    pub c2: Option<ModulePresentation>,
    /// Union of the summand varieties in each group.
    pub v1: VarietyIdeal,
    pub v2: VarietyIdeal,
    /// `V(C_i) = V(a_i)` for both groups.
    pub verdict: bool,
    pub decomposition: Decomposition,
}

fn group_sum(mods: &[&ModulePresentation]) -> Option<ModulePresentation> {
    let (first, rest) = mods.split_first()?;
    Some(rest.iter().fold((*first).clone(), |acc, m| acc.direct_sum(m)))
}

/// Splits `M` along `V(M) = V(a1) ∪ V(a2)` with `V(a1) ∩ V(a2) = {0}`.
/// Summands with trivial variety go to the first group.
pub fn check_carlson(
    m: &ModulePresentation,
    a1: &VarietyIdeal,
    a2: &VarietyIdeal,
    vcfg: &VarietyConfig,
    dcfg: &DecomposeConfig,
) -> Result<CarlsonReport> {
    let ring = m.ring();
    let budget = ring.budget();
    let h = ring.cohomology_ring();
    let v = support_variety(m, vcfg)?.ideal;
    let union = a1.union(a2, budget)?;
    if !union.equal(&v, budget)? {
        return Err(Error::input(
            "premise_failed",
            format!("V(a1) ∪ V(a2) = V{} is not V(M) = V{}", union.describe(), v.describe()),
        ));
    }
    if !a1.intersect(a2, budget)?.is_trivial(budget)? {
        return Err(Error::input("premise_failed", "V(a1) ∩ V(a2) is not trivial"));
    }
    let decomposition = decompose(m, dcfg)?;
    let mut summands = Vec::new();
    for (i, s) in decomposition.summands.iter().enumerate() {
        let sv = support_variety(&s.module, vcfg)?.ideal;
        let group = if sv.is_trivial(budget)? {
            1
        } else {
            match (a1.contains(&sv, budget)?, a2.contains(&sv, budget)?) {
                (true, _) => 1,
                (false, true) => 2,
                (false, false) => {
                    return Err(Error::verification(
                        "unassignable_summand",
                        format!("summand {} has variety V{} inside neither side", i + 1, sv.describe()),
                    ))
                }
            }
        };
        summands.push(AssignedSummand { module: s.module.clone(), variety: sv, group, certified: s.certified });
    }
    let union_of = |g: u8| -> Result<VarietyIdeal> {
        let mut acc: Option<VarietyIdeal> = None;
        for s in summands.iter().filter(|s| s.group == g) {
            acc = Some(match acc {
                None => s.variety.clone(),
                Some(a) => a.union(&s.variety, budget)?,
            });
        }
        Ok(acc.unwrap_or_else(|| VarietyIdeal::trivial(h)))
    };
    let v1 = union_of(1)?;
    let v2 = union_of(2)?;
    let verdict = v1.equal(a1, budget)? && v2.equal(a2, budget)?;
    let mods = |g: u8| summands.iter().filter(|s| s.group == g).map(|s| &s.module).collect::<Vec<_>>();
    let c1 = group_sum(&mods(1));
    let c2 = group_sum(&mods(2));
    Ok(CarlsonReport { variety: v, summands, c1, c2, v1, v2, verdict, decomposition })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::{present_module, RingSpec};

    #[test]
    fn axis_split() {
        let r = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let h = r.cohomology_ring();
        let m1 = present_module("gens: [0]\nrelations: [[x]]", &r).unwrap();
        let m2 = present_module("gens: [0]\nrelations: [[y]]", &r).unwrap();
        let a1 = VarietyIdeal::parse(h, "chi2").unwrap();
        let a2 = VarietyIdeal::parse(h, "chi1").unwrap();
        let vc = VarietyConfig::default();
        let dc = DecomposeConfig::default();
        let rep = check_carlson(&m1.direct_sum(&m2), &a1, &a2, &vc, &dc).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.summands.len(), 2);
        let g1: Vec<_> = rep.summands.iter().filter(|s| s.group == 1).collect();
        assert_eq!(g1.len(), 1);
        assert_eq!(g1[0].module.relations().entry(0, 0), r.ambient().var(0));

        let k = ModulePresentation::residue_field(&r);
        assert_eq!(check_carlson(&k, &a1, &a2, &vc, &dc).unwrap_err().reason, "premise_failed");
        let e = check_carlson(&m1.direct_sum(&m2), &a2, &a2, &vc, &dc).unwrap_err();
        assert_eq!(e.kind.exit_code(), 1);
    }
}
