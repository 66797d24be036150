//! Executable checks of the ideal identities, containments and length
//! additivities behind the epsilon/Amao comparison, on named instances and
//! on seeded random families.
//!
//! Exact identities are asserted as integer equalities. Limit comparisons
//! are asserted within a relative tolerance. A failing report carries a
//! witness that can be replayed without the code that produced it.

mod checks;
mod instances;
mod report;
mod suite;

pub use checks::{
    check_additivity_eq2, check_additivity_rmk2, check_graded_family, check_lem7_consistency,
    check_modular_law, check_remark21, check_vm_theorem, VmTheoremCheck, ADDITIVITY_COKERNEL,
    ADDITIVITY_KERNEL, GRADED_FAMILY, LEM7, MODULAR_LAW, REMARK21, VM_THEOREM,
};
pub use instances::{default_names, InstanceGen};
pub use report::{
    containment_witness, equality_witness, signed_sum, CheckReport, LengthTerm, Status, Summary,
    Witness,
};
pub use suite::{run_instance_suite, run_property_suite, InstanceParams, PropertySuite};
