use crate::group::{
    alternating, cyclic, dihedral, direct_product, is_solvable, quaternion, symmetric,
    FiniteGroup, Limits,
};

/// Default largest catalog order.
pub const DEFAULT_CATALOG_MAX: usize = 24;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
}

/// A fixed list of small solvable groups, ordered by order and then by
/// construction order. It is not a classification.
#[derive(Clone, Debug)]
pub struct SolvableCatalog {
    pub groups: Vec<CatalogEntry>,
}

impl SolvableCatalog {
    pub fn new(max_order: usize) -> Self {
        let mut base: Vec<(String, FiniteGroup)> = Vec::new();
        for n in 2..=12 {
            base.push((format!("C{n}"), cyclic(n)));
        }
        for n in 3..=6 {
            base.push((format!("D{n}"), dihedral(n)));
        }
        base.push(("Q8".into(), quaternion()));
        base.push(("A4".into(), alternating(4)));
        base.push(("S3".into(), symmetric(3)));
        base.push(("S4".into(), symmetric(4)));
        base.retain(|(_, g)| g.order() <= max_order);
        let limits = Limits {
            max_order: max_order.max(1),
            ..Limits::default()
        };
        let mut all = base.clone();
        for (i, (na, a)) in base.iter().enumerate() {
            for (nb, b) in &base[i..] {
                if a.order() * b.order() <= max_order {
                    let p = direct_product(&[a, b], &limits).expect("order checked");
                    all.push((format!("{na}x{nb}"), p.group));
                }
            }
        }
        all.sort_by_key(|(_, g)| g.order());
        let mut groups: Vec<CatalogEntry> = Vec::new();
        for (name, group) in all {
            if groups.iter().any(|e| e.group == group) {
                continue;
            }
            debug_assert!(is_solvable(&group));
            groups.push(CatalogEntry { name, group });
        }
        SolvableCatalog { groups }
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

impl Default for SolvableCatalog {
    fn default() -> Self {
        SolvableCatalog::new(DEFAULT_CATALOG_MAX)
    }
}
