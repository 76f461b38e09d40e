//! A uniform finite carrier for group computations.
//!
//! A [`FiniteGroupView`] is an ordered list of elements together with the
//! family multiplication. Truncations of the locally finite chains are
//! genuine subgroups and are marked closed; windows into the infinite
//! families are plain vertex sets, and every operation that needs closure
//! (worklist saturation, in-view orders, cyclicity tests) rejects them with
//! [`Error::WindowNotClosed`].

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::Error;
use crate::group_element::GroupElement;

pub struct FiniteGroupView {
    spec: String,
    elements: Vec<GroupElement>,
    labels: Vec<String>,
    index: HashMap<GroupElement, usize>,
    identity: usize,
    closed: bool,
    // lazily built index-level multiplication table, closed views only
    table: OnceLock<Vec<u32>>,
}

impl FiniteGroupView {
    /// Builds a view over the given elements, sorted into the deterministic
    /// listing order. `closed` marks genuine subgroups.
    pub(crate) fn new(
        spec: String,
        mut elements: Vec<GroupElement>,
        closed: bool,
    ) -> Result<FiniteGroupView, Error> {
        elements.sort();
        elements.dedup();
        if elements.is_empty() {
            return Err(Error::BadParam(format!("family `{spec}` has no elements")));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.clone(), i);
        }
        let identity = elements
            .iter()
            .position(GroupElement::is_identity)
            .ok_or_else(|| Error::BadParam(format!("family `{spec}` lacks the identity")))?;
        let labels = elements.iter().map(GroupElement::label).collect();
        Ok(FiniteGroupView {
            spec,
            elements,
            labels,
            index,
            identity,
            closed,
            table: OnceLock::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The canonical family string this view was built from.
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn require_closed(&self) -> Result<(), Error> {
        if self.closed {
            Ok(())
        } else {
            Err(Error::WindowNotClosed(self.spec.clone()))
        }
    }

    /// Element-level product; total within a single-family view.
    pub fn mul_elem(&self, i: usize, j: usize) -> GroupElement {
        self.elements[i]
            .mul(&self.elements[j])
            .expect("elements of one view share a family")
    }

    fn table(&self) -> &[u32] {
        self.table.get_or_init(|| {
            let n = self.len();
            let mut table = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    let p = self.mul_elem(i, j);
                    let k = self
                        .index_of(&p)
                        .expect("closed view: products stay inside");
                    table[i * n + j] = k as u32;
                }
            }
            table
        })
    }

    /// Index-level product. Requires a closed view.
    pub fn mul_index(&self, i: usize, j: usize) -> Result<usize, Error> {
        self.require_closed()?;
        Ok(self.table()[i * self.len() + j] as usize)
    }

    /// Order of `elements[i]` computed inside the view by repeated
    /// multiplication; independent of the closed-form element orders.
    pub fn order_in_view(&self, i: usize) -> Result<u64, Error> {
        self.require_closed()?;
        let table = self.table();
        let n = self.len();
        let mut acc = i;
        let mut m = 1u64;
        while acc != self.identity {
            acc = table[acc * n + i] as usize;
            m += 1;
        }
        Ok(m)
    }

    /// The smallest subset containing `gens` and the identity and closed
    /// under multiplication, as sorted indices; worklist saturation.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Result<Vec<usize>, Error> {
        self.require_closed()?;
        let table = self.table();
        let n = self.len();
        let mut in_set = vec![false; n];
        in_set[self.identity] = true;
        let mut members = vec![self.identity];
        let mut queue: Vec<usize> = gens.to_vec();
        while let Some(x) = queue.pop() {
            if in_set[x] {
                continue;
            }
            in_set[x] = true;
            members.push(x);
            for &y in &members {
                for p in [table[x * n + y] as usize, table[y * n + x] as usize] {
                    if !in_set[p] {
                        queue.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    /// Whether a closed subset is a cyclic subgroup: some member's in-view
    /// order equals the subset size. Verifies closure first and reports
    /// [`Error::NotClosed`] when the subset fails it.
    pub fn is_cyclic_subgroup(&self, subset: &[usize]) -> Result<bool, Error> {
        self.require_closed()?;
        let table = self.table();
        let n = self.len();
        let mut in_set = vec![false; n];
        for &i in subset {
            in_set[i] = true;
        }
        if !in_set[self.identity] {
            return Err(Error::NotClosed);
        }
        for &i in subset {
            for &j in subset {
                if !in_set[table[i * n + j] as usize] {
                    return Err(Error::NotClosed);
                }
            }
        }
        for &i in subset {
            if self.order_in_view(i)? == subset.len() as u64 {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
