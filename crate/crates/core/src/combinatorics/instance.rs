use super::category::AcyclicCategory;
use super::poset::Poset;
use super::system::{Kind, PathSystem};
use crate::error::Result;

#[allow(clippy::large_enum_variant)]
/// Either kind of input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Poset(Poset),
    Category(AcyclicCategory),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Poset(_) => Kind::Poset,
            Instance::Category(_) => Kind::Category,
        }
    }

    pub fn system(&self) -> Result<PathSystem> {
        match self {
            Instance::Poset(p) => PathSystem::from_poset(p),
            Instance::Category(c) => Ok(PathSystem::from_category(c)),
        }
    }

    /// Number of covers or generators.
    pub fn edge_count(&self) -> usize {
        match self {
            Instance::Poset(p) => p.covers().len(),
            Instance::Category(c) => c.generators().len(),
        }
    }

    /// Number of elements or objects.
    pub fn size(&self) -> usize {
        match self {
            Instance::Poset(p) => p.len(),
            Instance::Category(c) => c.objects().len(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        match self {
            Instance::Poset(p) => p.is_bounded(),
            Instance::Category(c) => c.is_augmented(),
        }
    }

    /// Adjoins new bounds unconditionally.
    pub fn augment(&self) -> Instance {
        match self {
            Instance::Poset(p) => Instance::Poset(p.augment()),
            Instance::Category(c) => Instance::Category(c.augment()),
        }
    }

    pub fn augment_if_needed(&self) -> Instance {
        match self {
            Instance::Poset(p) => Instance::Poset(p.augment_if_needed()),
            Instance::Category(c) => Instance::Category(c.augment_if_needed()),
        }
    }
}

impl From<Poset> for Instance {
    fn from(p: Poset) -> Self {
        Instance::Poset(p)
    }
}

impl From<AcyclicCategory> for Instance {
    fn from(c: AcyclicCategory) -> Self {
        Instance::Category(c)
    }
}
