//! Binary quadratic forms of negative discriminant: reduction, composition,
//! full class-group enumeration for maximal and nonmaximal orders, structure,
//! the projection to the maximal order and its fibers, and prime forms.

pub mod classgroup;
pub mod form;
pub mod maps;

pub use classgroup::{
    class_number, cosets, enumerate_class_group, enumerate_reduced_forms, prime_to_three_part,
    structure_string, subgroup_span, three_part, three_part_cyclic, FormClassGroup,
    DEFAULT_MAX_DISC,
};
pub use form::{prime_form, Disc, QuadForm};
pub use maps::{
    coprime_to_three_rep, expected_kernel_structure, lift_canonical, lift_to_order,
    project_to_maximal, projection_kernel, subgroup_structure,
};
