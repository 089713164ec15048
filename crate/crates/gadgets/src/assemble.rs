//! Assembly of composed instances from certified cover elements.
//!
//! Given a cover of a hard gadget, an index vector `x` picks one element per
//! copy; the assembler embeds `N = x.len()` copies of the elements'
//! radius-`T` neighborhoods into a single easy instance — either a connected
//! graph of prescribed size and chromatic number, or exactly a `W x H` grid.
//! Every embedded copy keeps its radius-`T` neighborhood byte-identical to
//! the gadget's, so no algorithm reading at most `T` hops can tell the easy
//! instance apart from the hard gadget near the marked nodes.

use analysis::{exact_chromatic_number, DEFAULT_SOLVER_BUDGET};
use graph_core::{
    bfs_distances_multi, grid_graph, induced_subgraph, neighborhood_of_set, Graph, IdMap,
    NodeSet, UNREACHABLE,
};
use std::collections::HashSet;

use crate::cover::{lattice_patch, CoverFamily, PatchIso, SubgraphCover};
use crate::error::GadgetError;
use crate::kb::kb_gadget;
use crate::rjoin::{rjoin_gadget, SIZE_LIMIT};

/// What the assembled instance must be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssembleTarget {
    /// A connected graph with exactly `n` nodes and the cover's certified
    /// chromatic number.
    Chromatic {
        /// Total node count, fillers included.
        n: u64,
    },
    /// Exactly the `w x h` grid graph.
    Grid {
        /// Grid width (number of columns).
        w: u32,
        /// Grid height (number of rows).
        h: u32,
    },
}

/// Where one embedded copy of a cover element's neighborhood lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchEmbedding {
    /// Index of the cover element this copy uses.
    pub element: u32,
    /// The neighborhood's node ids in the gadget, ascending.
    pub host_patch: Vec<u32>,
    /// The matching instance node ids, parallel to `host_patch`.
    pub instance_patch: Vec<u32>,
}

/// An assembled instance together with the bookkeeping that locates the
/// embedded gadget neighborhoods inside it.
#[derive(Clone, Debug)]
pub struct CheatingInstance {
    /// The assembled graph.
    pub graph: Graph,
    /// The marked nodes: the union of the embedded cover elements (their
    /// radius-`t` neighborhoods are the untouched patches).
    pub marked: NodeSet,
    /// The element index chosen for each copy.
    pub x: Vec<u32>,
    /// Per-copy embedding maps.
    pub patches: Vec<PatchEmbedding>,
    /// The gadget family the patches came from.
    pub family: CoverFamily,
    /// The declared target shape.
    pub target: AssembleTarget,
    /// The certification radius inherited from the cover.
    pub t: u32,
}

/// Rebuilds the host gadget a cover refers to.
pub fn family_host(family: CoverFamily) -> Result<Graph, GadgetError> {
    match family {
        CoverFamily::Rjoin { chi, r, k } => rjoin_gadget(chi, r, k),
        CoverFamily::Kb { w, h } => kb_gadget(w, h),
    }
}

struct CopyPlan {
    element: u32,
    nhood: NodeSet,
    sub: Graph,
    idmap: IdMap,
    witness: u32,
}

fn plan_copies(
    host: &Graph,
    cover: &SubgraphCover,
    x: &[u32],
) -> Result<Vec<CopyPlan>, GadgetError> {
    if x.is_empty() {
        return Err(GadgetError::DoesNotFit("at least one copy is required".into()));
    }
    if cover.elements.len() != cover.certificates.len() {
        return Err(GadgetError::BadParams(
            "cover has mismatched element and certificate counts".into(),
        ));
    }
    x.iter()
        .map(|&xi| {
            let element = cover.elements.get(xi as usize).ok_or_else(|| {
                GadgetError::BadParams(format!(
                    "element index {xi} out of range for a {}-element cover",
                    cover.elements.len()
                ))
            })?;
            let nhood = neighborhood_of_set(host, element, cover.t);
            let (sub, idmap) =
                induced_subgraph(host, &nhood).expect("neighborhood is in range");
            let witness = cover.certificates[xi as usize].witness;
            if !nhood.contains(witness) {
                return Err(GadgetError::CertificateFailed(format!(
                    "witness {witness} of element {xi} is outside its neighborhood"
                )));
            }
            Ok(CopyPlan { element: xi, nhood, sub, idmap, witness })
        })
        .collect()
}

/// Checks that each embedded patch is untouched: the radius-`t` neighborhood
/// of the embedded element equals the embedded patch node-for-node, and the
/// instance edges inside it are exactly the mapped gadget edges.
fn check_patches_untouched(
    instance: &Graph,
    cover: &SubgraphCover,
    copies: &[CopyPlan],
    patches: &[PatchEmbedding],
) -> Result<(), GadgetError> {
    for (copy, patch) in copies.iter().zip(patches) {
        let to_instance = |host_id: u32| {
            let s = copy.idmap.to_sub(host_id).expect("patch node is in the neighborhood");
            patch.instance_patch[s as usize]
        };
        let core: NodeSet =
            cover.elements[copy.element as usize].iter().map(to_instance).collect();
        let image: NodeSet = patch.instance_patch.iter().copied().collect();
        if neighborhood_of_set(instance, &core, cover.t) != image {
            return Err(GadgetError::CertificateFailed(format!(
                "embedded copy of element {} has a distorted radius-{} neighborhood",
                copy.element, cover.t
            )));
        }
        let normalize = |u: u32, v: u32| (u.min(v), u.max(v));
        let mapped: HashSet<(u32, u32)> = copy
            .sub
            .edges()
            .map(|(u, v)| {
                normalize(patch.instance_patch[u as usize], patch.instance_patch[v as usize])
            })
            .collect();
        let mut inside = 0usize;
        for &u in &patch.instance_patch {
            for &v in instance.neighbors(u) {
                if u < v && image.contains(v) {
                    inside += 1;
                    if !mapped.contains(&normalize(u, v)) {
                        return Err(GadgetError::CertificateFailed(format!(
                            "embedded copy of element {} gained edge ({u},{v})",
                            copy.element
                        )));
                    }
                }
            }
        }
        if inside != mapped.len() {
            return Err(GadgetError::CertificateFailed(format!(
                "embedded copy of element {} lost {} edges",
                copy.element,
                mapped.len() - inside
            )));
        }
    }
    Ok(())
}

fn assemble_chromatic(
    cover: &SubgraphCover,
    x: &[u32],
    n: u64,
) -> Result<CheatingInstance, GadgetError> {
    let host = family_host(cover.family)?;
    let copies = plan_copies(&host, cover, x)?;
    let total: u64 = copies.iter().map(|c| c.nhood.len() as u64).sum();
    if n < total {
        return Err(GadgetError::DoesNotFit(format!(
            "the {} copies need {total} nodes but only {n} were requested",
            copies.len()
        )));
    }
    if n > SIZE_LIMIT {
        return Err(GadgetError::SizeLimit { requested: n, limit: SIZE_LIMIT });
    }
    let n = n as usize;

    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut labels: Vec<String> = Vec::with_capacity(n);
    let mut patches = Vec::with_capacity(copies.len());
    let mut offset: u32 = 0;
    for (j, copy) in copies.iter().enumerate() {
        for (u, v) in copy.sub.edges() {
            edges.push((offset + u, offset + v));
        }
        for v in copy.nhood.iter() {
            let base = host.label(v).map_or_else(|| v.to_string(), str::to_string);
            labels.push(format!("c{j}.{base}"));
        }
        let host_patch: Vec<u32> = copy.nhood.iter().collect();
        let instance_patch: Vec<u32> =
            (offset..offset + copy.nhood.len() as u32).collect();
        patches.push(PatchEmbedding { element: copy.element, host_patch, instance_patch });
        offset += copy.nhood.len() as u32;
    }
    let witness_in_instance = |j: usize| {
        let copy = &copies[j];
        let s = copy.idmap.to_sub(copy.witness).expect("witness is in the neighborhood");
        patches[j].instance_patch[s as usize]
    };
    for j in 0..copies.len() - 1 {
        edges.push((witness_in_instance(j), witness_in_instance(j + 1)));
    }
    for (i, filler) in (total as u32..n as u32).enumerate() {
        let previous =
            if i == 0 { witness_in_instance(copies.len() - 1) } else { filler - 1 };
        edges.push((previous, filler));
        labels.push(format!("f{i}"));
    }

    let graph = Graph::build(n, edges)?.with_labels(labels);
    let reached = bfs_distances_multi(&graph, [0]);
    if reached.iter().any(|&d| d == UNREACHABLE) {
        return Err(GadgetError::CertificateFailed(
            "assembled instance is not connected".into(),
        ));
    }
    let expected_chi = cover.expected_local_chi();
    let chi = exact_chromatic_number(&graph, DEFAULT_SOLVER_BUDGET)?.chi;
    if chi != expected_chi {
        return Err(GadgetError::CertificateFailed(format!(
            "assembled instance has chromatic number {chi}, expected {expected_chi}"
        )));
    }
    check_patches_untouched(&graph, cover, &copies, &patches)?;

    let marked = marked_union(cover, &copies, &patches);
    Ok(CheatingInstance {
        graph,
        marked,
        x: x.to_vec(),
        patches,
        family: cover.family,
        target: AssembleTarget::Chromatic { n: n as u64 },
        t: cover.t,
    })
}

fn assemble_grid(
    cover: &SubgraphCover,
    x: &[u32],
    gw: u32,
    gh: u32,
) -> Result<CheatingInstance, GadgetError> {
    let CoverFamily::Kb { w, h } = cover.family else {
        return Err(GadgetError::BadParams(
            "grid targets need a family with lattice-patch certificates".into(),
        ));
    };
    let host = family_host(cover.family)?;
    let copies = plan_copies(&host, cover, x)?;
    let n_copies = copies.len() as u32;
    if gw / n_copies < 5 || gh / n_copies < 5 {
        return Err(GadgetError::DoesNotFit(format!(
            "a {gw}x{gh} grid cannot host {n_copies} bands at least 5 wide"
        )));
    }
    let band_w = gw / n_copies;
    let t = cover.t;
    let (core_w, core_h) = ((w + 5) / 2, (h + 5) / 2);
    if core_w + 2 * t > band_w || core_h + 2 * t > gh {
        return Err(GadgetError::DoesNotFit(format!(
            "patches of bounding box {}x{} do not fit {band_w}-wide bands of height {gh}",
            core_w + 2 * t,
            core_h + 2 * t
        )));
    }
    let (reference, ref_coords) = lattice_patch(core_w, core_h, t);

    let instance = grid_graph(gw as usize, gh as usize);
    let mut patches = Vec::with_capacity(copies.len());
    for (j, copy) in copies.iter().enumerate() {
        let cert = &cover.certificates[copy.element as usize];
        let Some(PatchIso::Isomorphic { mapping }) = &cert.patch_iso else {
            return Err(GadgetError::CertificateFailed(format!(
                "element {} has no lattice-patch isomorphism to embed with",
                copy.element
            )));
        };
        if mapping.len() != copy.sub.n() || copy.sub.n() != reference.n() {
            return Err(GadgetError::CertificateFailed(format!(
                "element {} has a malformed lattice-patch certificate",
                copy.element
            )));
        }
        let instance_patch: Vec<u32> = (0..copy.sub.n() as u32)
            .map(|s| {
                let (rx, ry) = ref_coords[mapping[s as usize] as usize];
                let col = i64::from(j as u32 * band_w + t) + rx;
                let row = i64::from(t) + ry;
                debug_assert!(col >= 0 && (col as u32) < gw && row >= 0 && (row as u32) < gh);
                col as u32 * gh + row as u32
            })
            .collect();
        let host_patch: Vec<u32> = copy.nhood.iter().collect();
        patches.push(PatchEmbedding { element: copy.element, host_patch, instance_patch });
    }
    check_patches_untouched(&instance, cover, &copies, &patches)?;

    let marked = marked_union(cover, &copies, &patches);
    Ok(CheatingInstance {
        graph: instance,
        marked,
        x: x.to_vec(),
        patches,
        family: cover.family,
        target: AssembleTarget::Grid { w: gw, h: gh },
        t: cover.t,
    })
}

fn marked_union(
    cover: &SubgraphCover,
    copies: &[CopyPlan],
    patches: &[PatchEmbedding],
) -> NodeSet {
    let mut ids = Vec::new();
    for (copy, patch) in copies.iter().zip(patches) {
        for v in cover.elements[copy.element as usize].iter() {
            let s = copy.idmap.to_sub(v).expect("element node is in the neighborhood");
            ids.push(patch.instance_patch[s as usize]);
        }
    }
    NodeSet::from_unsorted(ids)
}

/// Assembles `x.len()` copies of the chosen cover elements' neighborhoods
/// into an instance of the declared target shape. Fails with
/// [`GadgetError::DoesNotFit`] when the copies cannot fit and with
/// [`GadgetError::CertificateFailed`] when the result would not satisfy the
/// target's invariants (connected and exactly the certified chromatic
/// number, or exactly the requested grid, with every embedded neighborhood
/// untouched).
pub fn assemble_cheating_instance(
    cover: &SubgraphCover,
    x: &[u32],
    target: AssembleTarget,
) -> Result<CheatingInstance, GadgetError> {
    match target {
        AssembleTarget::Chromatic { n } => assemble_chromatic(cover, x, n),
        AssembleTarget::Grid { w, h } => assemble_grid(cover, x, w, h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kb::kb_cover;
    use crate::rjoin::rjoin_cover;

    #[test]
    fn zero_copies_do_not_fit() {
        let cover = rjoin_cover(2, 3, 2).unwrap();
        let err = assemble_cheating_instance(&cover, &[], AssembleTarget::Chromatic { n: 100 })
            .unwrap_err();
        assert!(matches!(err, GadgetError::DoesNotFit(_)));
    }

    #[test]
    fn chromatic_assembly_of_two_copies() {
        let cover = rjoin_cover(2, 3, 2).unwrap();
        let host = family_host(cover.family).unwrap();
        let patch: u64 = cover
            .elements
            .iter()
            .take(2)
            .map(|e| neighborhood_of_set(&host, e, cover.t).len() as u64)
            .sum();
        let n = patch + 10;
        let inst =
            assemble_cheating_instance(&cover, &[0, 1], AssembleTarget::Chromatic { n })
                .unwrap();
        assert_eq!(inst.graph.n() as u64, n);
        assert_eq!(inst.patches.len(), 2);
        assert_eq!(inst.x, vec![0, 1]);
        let too_small = assemble_cheating_instance(
            &cover,
            &[0, 1],
            AssembleTarget::Chromatic { n: patch - 1 },
        );
        assert!(matches!(too_small, Err(GadgetError::DoesNotFit(_))));
    }

    #[test]
    fn grid_assembly_embeds_a_patch() {
        let cover = kb_cover(9, 9).unwrap();
        let inst =
            assemble_cheating_instance(&cover, &[2], AssembleTarget::Grid { w: 9, h: 9 })
                .unwrap();
        assert_eq!(inst.graph.n(), 81);
        assert_eq!(inst.graph.m(), 2 * 9 * 8);
        assert_eq!(inst.patches[0].host_patch.len(), 49);
        assert_eq!(inst.marked.len(), 49);
        let too_many = assemble_cheating_instance(
            &cover,
            &[0, 1, 2],
            AssembleTarget::Grid { w: 9, h: 9 },
        );
        assert!(matches!(too_many, Err(GadgetError::DoesNotFit(_))));
    }

    #[test]
    fn grid_targets_reject_join_families() {
        let cover = rjoin_cover(2, 3, 2).unwrap();
        let err = assemble_cheating_instance(&cover, &[0], AssembleTarget::Grid { w: 9, h: 9 })
            .unwrap_err();
        assert!(matches!(err, GadgetError::BadParams(_)));
    }
}
