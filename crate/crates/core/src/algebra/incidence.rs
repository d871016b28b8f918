//! Products of interval basis elements in the incidence algebra and in its
//! associated graded algebra.

use crate::combinatorics::paths::VertexId;
use crate::combinatorics::poset::Poset;
use crate::error::{Error, Result};

fn require(p: &Poset, x: VertexId, y: VertexId) -> Result<()> {
    if p.leq(x, y) {
        Ok(())
    } else {
        Err(Error::NotComparable(p.name(x).into(), p.name(y).into()))
    }
}

/// `xi[x,y] * xi[z,w]` is `xi[x,w]` when `y = z`, zero otherwise.
pub fn incidence_product(
    p: &Poset,
    (x, y): (VertexId, VertexId),
    (z, w): (VertexId, VertexId),
) -> Result<Option<(VertexId, VertexId)>> {
    require(p, x, y)?;
    require(p, z, w)?;
    Ok((y == z).then_some((x, w)))
}

/// Product in the associated graded algebra: nonzero only when the degrees
/// (longest chain lengths) add up.
pub fn graded_product(
    p: &Poset,
    (x, y): (VertexId, VertexId),
    (w, z): (VertexId, VertexId),
) -> Result<Option<(VertexId, VertexId)>> {
    require(p, x, y)?;
    require(p, w, z)?;
    if y != w {
        return Ok(None);
    }
    let lhs = p.rank_of_interval(x, y)? + p.rank_of_interval(w, z)?;
    Ok((lhs == p.rank_of_interval(x, z)?).then_some((x, z)))
}
