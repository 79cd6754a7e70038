use super::{Mode, PfpfInstance};
use crate::error::{Error, Result};
use crate::graph::VertexColoring;
use crate::perm::Permutation;

/// Witness on a complete or edgeless graph where only colors and the mask
/// matter: a cyclic shift (or pairing) inside every color class.
pub(crate) fn class_witness(coloring: &VertexColoring, mask: &[bool], mode: Mode) -> Option<Vec<usize>> {
    let mut image: Vec<usize> = (0..coloring.len()).collect();
    for class in coloring.classes() {
        let len = class.len();
        match mode {
            Mode::Automorphism => {
                if len == 1 {
                    if !mask[class[0]] {
                        return None;
                    }
                } else {
                    for i in 0..len {
                        image[class[i]] = class[(i + 1) % len];
                    }
                }
            }
            Mode::Involution => {
                let mut rest = class;
                if len % 2 == 1 {
                    let keep = rest.iter().position(|&v| mask[v])?;
                    rest.remove(keep);
                }
                for pair in rest.chunks(2) {
                    image[pair[0]] = pair[1];
                    image[pair[1]] = pair[0];
                }
            }
        }
    }
    Some(image)
}

/// PFPF on a complete or edgeless graph.
pub fn pfpf_complete_or_empty(inst: &PfpfInstance) -> Result<Option<Permutation>> {
    inst.validate()?;
    if !inst.graph.is_complete() && !inst.graph.is_edgeless() {
        return Err(Error::NotCompleteOrEdgeless);
    }
    class_witness(&inst.coloring, inst.mask.as_slice(), inst.mode)
        .map(Permutation::from_images)
        .transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BooleanMask, Graph};

    fn inst(g: Graph, colors: &[u32], mask: &[bool], mode: Mode) -> PfpfInstance {
        PfpfInstance::new(
            g,
            VertexColoring::from_values(colors),
            BooleanMask::new(mask.to_vec()),
            mode,
        )
        .unwrap()
    }

    #[test]
    fn examples() {
        let w = pfpf_complete_or_empty(&inst(Graph::complete(3), &[0, 0, 0], &[false; 3], Mode::Automorphism))
            .unwrap()
            .unwrap();
        assert_eq!(w.cycles(), vec![vec![0, 1, 2]]);
        let none = pfpf_complete_or_empty(&inst(Graph::complete(2), &[0, 1], &[false; 2], Mode::Automorphism)).unwrap();
        assert!(none.is_none());
        let none =
            pfpf_complete_or_empty(&inst(Graph::complete(3), &[0, 0, 0], &[false; 3], Mode::Involution)).unwrap();
        assert!(none.is_none());
        let w = pfpf_complete_or_empty(&inst(
            Graph::empty(3),
            &[0, 0, 0],
            &[false, true, false],
            Mode::Involution,
        ))
        .unwrap()
        .unwrap();
        assert_eq!(w.fixed_points(), vec![1]);
        assert!(matches!(
            pfpf_complete_or_empty(&inst(Graph::path(3), &[0, 0, 0], &[true; 3], Mode::Automorphism)),
            Err(Error::NotCompleteOrEdgeless)
        ));
    }
}
