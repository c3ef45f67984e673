//! Kähler differentials of `k(x)`, residues, and the principal-parts map.

pub mod forms;
pub mod place;
pub mod residue;

pub use forms::{
    d_abs, d_rel, project_rprime, split_global_form, AbsoluteForm, ConstantForm, RelativeForm,
};
pub use place::{
    principal_parts, principal_parts_on, support, Place, PrincipalPartAt, PrincipalParts,
};
pub use residue::{h1_class_equal, is_exact, res_h1x, residue_at, residue_of, DxPart, Exactness};
