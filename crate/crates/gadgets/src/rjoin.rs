//! Iterated-join gadgets and their subgraph covers.
//!
//! Starting from a clique `K_chi`, repeatedly taking the `2r`-join with a
//! fresh `K_chi` produces graphs whose radius-`r` views are `chi`-colorable
//! while the global chromatic number grows by `chi - 1` per iteration. The
//! cover construction splits each gadget into `k` elements whose radius-`T`
//! neighborhoods (`T = floor(2r/3)`) are still only `chi`-chromatic.

use analysis::DEFAULT_SOLVER_BUDGET;
use graph_core::{complete_graph, r_join, Graph, NodeSet, RJoinLayout, RJoinNode};

use crate::cover::{compute_certificate, CoverFamily, SubgraphCover};
use crate::error::GadgetError;

/// Generators refuse to build graphs above this many nodes.
pub const SIZE_LIMIT: u64 = 1_000_000;

/// Closed-form node count of [`rjoin_gadget`]`(chi, r, k)`:
/// `((2*r*chi + 1)^k - 1) / (2*r)`. Saturates at `u128::MAX` on overflow.
#[must_use]
pub fn rjoin_size(chi: u32, r: u32, k: u32) -> u128 {
    // Iterate n_j = n_{j-1} * (2*r*chi + 1) + chi, n_0 = 0, which telescopes
    // to the closed form without intermediate division.
    let step = 2 * u128::from(r) * u128::from(chi) + 1;
    let mut n: u128 = 0;
    for _ in 0..k {
        let Some(grown) = n.checked_mul(step).and_then(|x| x.checked_add(u128::from(chi)))
        else {
            return u128::MAX;
        };
        n = grown;
    }
    n
}

fn check_rjoin_params(chi: u32, r: u32, k: u32) -> Result<(), GadgetError> {
    if chi < 2 {
        return Err(GadgetError::BadParams(format!("chi must be at least 2, got {chi}")));
    }
    if r < 2 {
        return Err(GadgetError::BadParams(format!("r must be at least 2, got {r}")));
    }
    if k < 1 {
        return Err(GadgetError::BadParams("k must be at least 1".into()));
    }
    let size = rjoin_size(chi, r, k);
    if size > u128::from(SIZE_LIMIT) {
        return Err(GadgetError::SizeLimit {
            requested: u64::try_from(size).unwrap_or(u64::MAX),
            limit: SIZE_LIMIT,
        });
    }
    Ok(())
}

/// Builds the gadget together with the id layout of every join step
/// (`layouts[j]` describes the join that produced `G_{j+2}` from `G_{j+1}`).
/// Node ids of the left factor are preserved by each join, which lets cover
/// formulas written against `G_{j}` carry over to `G_{j+1}` unchanged.
fn build_rjoin(chi: u32, r: u32, k: u32) -> Result<(Graph, Vec<RJoinLayout>), GadgetError> {
    check_rjoin_params(chi, r, k)?;
    let block = complete_graph(chi as usize);
    let mut g = block
        .clone()
        .with_labels((0..chi).map(|b| format!("K1.{b}")).collect());
    let mut layouts = Vec::new();
    for j in 2..=k {
        let (joined, layout) = r_join(&g, &block, 2 * r);
        let old_labels = g.labels().expect("labels are maintained").to_vec();
        let labels = (0..layout.total())
            .map(|id| match layout.node(id) {
                RJoinNode::Left(a) => old_labels[a as usize].clone(),
                RJoinNode::Mid { a, b, level } => {
                    format!("({},K{j}.{b},{level})", old_labels[a as usize])
                }
                RJoinNode::Right(b) => format!("K{j}.{b}"),
            })
            .collect();
        g = joined.with_labels(labels);
        layouts.push(layout);
    }
    Ok((g, layouts))
}

/// The iterated-join gadget `G_k`: `G_1 = K_chi` and
/// `G_j = G_{j-1} join_{2r} K_chi`. Labels record the recursive coordinates
/// (`K1.0`, `(K1.0,K2.1,3)`, ...).
pub fn rjoin_gadget(chi: u32, r: u32, k: u32) -> Result<Graph, GadgetError> {
    build_rjoin(chi, r, k).map(|(g, _)| g)
}

/// The `k`-element subgraph cover of [`rjoin_gadget`]`(chi, r, k)` at radius
/// `T = floor(2r/3)`, with verified certificates.
///
/// Element `j < k - 1` consists of everything on the `G_{j+1}` side of join
/// `j+2` up to interior level `T+2`; the last element is everything from
/// level `T+1` of the final join rightward. Certificates (neighborhood
/// chromatic number `chi`, connectivity, a distance-`T` witness) are
/// computed here and the chromatic ones are also checked here: a mismatch is
/// a construction bug reported as [`GadgetError::CertificateFailed`].
pub fn rjoin_cover(chi: u32, r: u32, k: u32) -> Result<SubgraphCover, GadgetError> {
    if r < 3 {
        return Err(GadgetError::BadParams(format!(
            "covers require r at least 3, got {r}"
        )));
    }
    if k < 2 {
        return Err(GadgetError::BadParams(format!(
            "covers require k at least 2, got {k}"
        )));
    }
    let (host, layouts) = build_rjoin(chi, r, k)?;
    let t = 2 * r / 3;

    // Element node sets over G_j ids, grown join by join. After the join
    // producing G_{j+1}, every existing element (a set of left-factor ids,
    // which are preserved) is extended by the interior nodes it can reach in
    // the first T+2 levels; one new element takes the right factor plus
    // levels T+1..=2r.
    let mut elements: Vec<Vec<u32>> = vec![(0..chi).collect()];
    for layout in &layouts {
        let mid = |a: u32, b: u32, level: u32| layout.id(RJoinNode::Mid { a, b, level });
        for element in &mut elements {
            let mut extension = Vec::new();
            for &a in element.iter() {
                for b in 0..layout.nr {
                    for level in 1..=t + 2 {
                        extension.push(mid(a, b, level));
                    }
                }
            }
            element.extend(extension);
        }
        let mut last: Vec<u32> =
            (0..layout.nr).map(|b| layout.id(RJoinNode::Right(b))).collect();
        for a in 0..layout.nl {
            for b in 0..layout.nr {
                for level in t + 1..=2 * r {
                    last.push(mid(a, b, level));
                }
            }
        }
        elements.push(last);
    }
    let elements: Vec<NodeSet> =
        elements.into_iter().map(NodeSet::from_unsorted).collect();

    let mut certificates = Vec::with_capacity(elements.len());
    for (idx, element) in elements.iter().enumerate() {
        let cert = compute_certificate(&host, element, t, None, DEFAULT_SOLVER_BUDGET)?;
        if cert.local_chi != chi {
            return Err(GadgetError::CertificateFailed(format!(
                "element {idx}: neighborhood chromatic number is {} instead of {chi}",
                cert.local_chi
            )));
        }
        if !cert.connected {
            return Err(GadgetError::CertificateFailed(format!(
                "element {idx} is not connected"
            )));
        }
        certificates.push(cert);
    }
    Ok(SubgraphCover { family: CoverFamily::Rjoin { chi, r, k }, t, elements, certificates })
}
