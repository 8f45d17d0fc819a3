//! Python bindings. Semigroups are built from tables, transformation
//! generators or one of the example families; character tables are the
//! built-in abelian ones.

use std::sync::OnceLock;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use semirep::characters::{abelian_character_table, CharacterTable};
use semirep::constructions as cons;
use semirep::quiver::{full_quiver, QuiverGraph};
use semirep::rep::{cartan_matrix, is_directed, nico_bound, semisimple_quotient, Analysis};
use semirep::semigroup::{
    enumerate_from_generators, FiniteSemigroup, Group, SemigroupFile, DEFAULT_ELEMENT_CAP,
};
use semirep::Error;

create_exception!(semirep_py, PreconditionError, PyException);
create_exception!(semirep_py, ConsistencyError, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Precondition(_) => PreconditionError::new_err(e.to_string()),
        Error::Internal(_) => ConsistencyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

type Res<T> = PyResult<T>;

#[pyclass(name = "Semigroup", module = "semirep_py", frozen)]
struct PySemigroup {
    inner: FiniteSemigroup,
    analysis: OnceLock<Result<Analysis, String>>,
}

impl PySemigroup {
    fn wrap(inner: FiniteSemigroup) -> Self {
        PySemigroup {
            inner,
            analysis: OnceLock::new(),
        }
    }

    fn analysis(&self) -> Res<&Analysis> {
        self.analysis
            .get_or_init(|| Analysis::new(self.inner.clone()).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|msg| PreconditionError::new_err(msg.clone()))
    }

    fn tables(&self) -> Res<Vec<CharacterTable>> {
        self.analysis()?.default_tables().map_err(to_py)
    }
}

#[pymethods]
impl PySemigroup {
    /// Multiplication table as a list of rows.
    #[staticmethod]
    #[pyo3(signature = (table, identity=None, labels=None))]
    fn from_table(table: Vec<Vec<usize>>, identity: Option<usize>, labels: Option<Vec<String>>) -> Res<Self> {
        FiniteSemigroup::from_table(table, identity, labels).map(Self::wrap).map_err(to_py)
    }

    /// Closure of transformations of `0..degree`, composed left to right.
    #[staticmethod]
    #[pyo3(signature = (degree, maps, adjoin_identity=false, cap=DEFAULT_ELEMENT_CAP))]
    fn from_generators(degree: usize, maps: Vec<Vec<usize>>, adjoin_identity: bool, cap: usize) -> Res<Self> {
        let t = enumerate_from_generators(degree, &maps, adjoin_identity, cap).map_err(to_py)?;
        Ok(Self::wrap(t.semigroup))
    }

    #[staticmethod]
    #[pyo3(signature = (text, cap=DEFAULT_ELEMENT_CAP))]
    fn from_json(text: &str, cap: usize) -> Res<Self> {
        let file = SemigroupFile::from_json(text).map_err(to_py)?;
        file.build(cap).map(Self::wrap).map_err(to_py)
    }

    /// Ordered partitions of `n` labelled by the cyclic group of the given order.
    #[staticmethod]
    #[pyo3(signature = (n, group_order=1))]
    fn hsiao(n: usize, group_order: usize) -> Res<Self> {
        if group_order == 0 {
            return Err(PyValueError::new_err("group_order must be positive"));
        }
        let h = cons::hsiao_semigroup(n, &Group::cyclic(group_order)).map_err(to_py)?;
        Ok(Self::wrap(h.semigroup))
    }

    /// Permutation group with the constant maps adjoined.
    #[staticmethod]
    fn gbar(degree: usize, maps: Vec<Vec<usize>>) -> Res<Self> {
        let t = cons::perm_group_with_constants(degree, &maps).map_err(to_py)?;
        Ok(Self::wrap(t.semigroup))
    }

    /// `M(C2, 2, 2, [[e, e], [e, g]])` with an identity adjoined.
    #[staticmethod]
    fn rees_c2() -> Res<Self> {
        cons::rees_with_identity(&cons::ReesSpec::c2_example()).map(Self::wrap).map_err(to_py)
    }

    fn to_json(&self) -> String {
        SemigroupFile::from_semigroup(&self.inner).to_json()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Semigroup(order={})", self.inner.order())
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn identity(&self) -> Option<usize> {
        self.inner.identity()
    }

    fn label(&self, x: usize) -> Res<String> {
        self.check(x)?;
        Ok(self.inner.label(x))
    }

    fn mul(&self, a: usize, b: usize) -> Res<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.inner.mul(a, b))
    }

    fn idempotents(&self) -> Vec<usize> {
        self.inner.idempotents()
    }

    fn is_regular(&self) -> bool {
        self.inner.is_regular()
    }

    fn is_rrbg(&self) -> bool {
        self.inner.is_rrbg()
    }

    fn opposite(&self) -> Self {
        Self::wrap(self.inner.opposite())
    }

    /// J-classes as sorted element lists.
    fn j_classes(&self) -> Res<Vec<Vec<usize>>> {
        Ok(self.analysis()?.green.j.classes.clone())
    }

    /// J-class indices, minimal classes first.
    fn principal_order(&self) -> Res<Vec<usize>> {
        Ok(self.analysis()?.green.principal_order.clone())
    }

    /// Orders of the maximal subgroups, by J-class index.
    fn group_orders(&self) -> Res<Vec<usize>> {
        Ok(self.analysis()?.subgroups.iter().map(|g| g.group.order()).collect())
    }

    fn is_directed(&self) -> Res<bool> {
        is_directed(self.analysis()?).map(|r| r.directed).map_err(to_py)
    }

    /// Expansion rank and full rank of each sandwich matrix, by J-class.
    fn sandwich_ranks(&self) -> Res<Vec<(usize, usize)>> {
        let r = is_directed(self.analysis()?).map_err(to_py)?;
        Ok(r.classes.iter().map(|c| (c.expansion_rank, c.full_rank)).collect())
    }

    /// Cartan matrix over the vertices of `quiver()`, both routes compared.
    fn cartan_matrix(&self) -> Res<Vec<Vec<usize>>> {
        let tables = self.tables()?;
        cartan_matrix(self.analysis()?, &tables).map(|c| c.entries).map_err(to_py)
    }

    #[pyo3(signature = (oracle=false))]
    fn quiver(&self, oracle: bool) -> Res<PyQuiver> {
        let tables = self.tables()?;
        let report = full_quiver(self.analysis()?, &tables, oracle).map_err(to_py)?;
        Ok(PyQuiver { inner: report.graph })
    }

    /// `(kernel dimension, nilpotency index)` of `kS → ⊕ kG_i`.
    fn radical(&self) -> Res<(usize, Option<usize>)> {
        let q = semisimple_quotient(self.analysis()?).map_err(to_py)?;
        Ok((q.kernel_dim, q.nilpotency_index))
    }

    fn nico_bound(&self) -> Res<usize> {
        let an = self.analysis()?;
        Ok(nico_bound(&an.semigroup, &an.green).bound)
    }
}

impl PySemigroup {
    fn check(&self, x: usize) -> Res<()> {
        if x >= self.inner.order() {
            return Err(PyValueError::new_err(format!("element {x} out of range")));
        }
        Ok(())
    }
}

#[pyclass(name = "Quiver", module = "semirep_py", frozen)]
struct PyQuiver {
    inner: QuiverGraph,
}

#[pymethods]
impl PyQuiver {
    /// `(id, jclass, irreducible, display)` per vertex.
    #[getter]
    fn vertices(&self) -> Vec<(usize, usize, String, String)> {
        self.inner
            .vertices
            .iter()
            .map(|v| (v.id, v.jclass, v.irr.clone(), v.display.clone()))
            .collect()
    }

    /// `(from, to, multiplicity)` per arrow.
    #[getter]
    fn arrows(&self) -> Vec<(usize, usize, usize)> {
        self.inner.arrows.iter().map(|a| (a.from, a.to, a.mult)).collect()
    }

    fn arrow_count(&self) -> usize {
        self.inner.arrow_count()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn same_labelled(&self, other: &PyQuiver) -> bool {
        self.inner.same_labelled(&other.inner)
    }

    fn __repr__(&self) -> String {
        format!("Quiver(vertices={}, arrows={})", self.inner.vertices.len(), self.inner.arrow_count())
    }
}

fn cyclic_table(group_order: usize) -> Res<CharacterTable> {
    if group_order == 0 {
        return Err(PyValueError::new_err("group_order must be positive"));
    }
    abelian_character_table(&Group::cyclic(group_order)).map_err(to_py)
}

/// Closed-form quiver of ordered partitions over a cyclic group.
#[pyfunction]
#[pyo3(signature = (n, group_order=1))]
fn hsiao_closed_form(n: usize, group_order: usize) -> Res<PyQuiver> {
    Ok(PyQuiver {
        inner: cons::hsiao_quiver_closed_form(n, &cyclic_table(group_order)?),
    })
}

/// The same quiver by the general algorithm, vertices renamed to match.
#[pyfunction]
#[pyo3(signature = (n, group_order=1, oracle=false))]
fn hsiao_general(n: usize, group_order: usize, oracle: bool) -> Res<PyQuiver> {
    let report = cons::hsiao_quiver_general(n, &cyclic_table(group_order)?, oracle).map_err(to_py)?;
    Ok(PyQuiver { inner: report.graph })
}

#[pyfunction]
fn rank(degree: usize, maps: Vec<Vec<usize>>) -> Res<usize> {
    cons::rank(degree, &maps).map_err(to_py)
}

/// `"finite"`, `"tame"` or `"wild"`.
#[pyfunction]
fn representation_type(degree: usize, maps: Vec<Vec<usize>>) -> Res<String> {
    cons::representation_type(degree, &maps).map(|t| t.to_string()).map_err(to_py)
}

#[pymodule]
fn semirep_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_class::<PyQuiver>()?;
    m.add_function(wrap_pyfunction!(hsiao_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(hsiao_general, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(representation_type, m)?)?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add("ConsistencyError", m.py().get_type::<ConsistencyError>())?;
    Ok(())
}
