"""conewalk: growth of balls, stabilized weights, and trace diagrams for
random-walk supports on groups.

Subpackage map:

* groups            element arithmetic and normal forms
* growth            ball sequences, witnessed stabilized-weight bounds
* heis              Heisenberg interval formula, exact weights, boundary sets
* partitions        bounded partition counts and walk-coefficient oracles
* traces            discrete, multiplicative and faithful trace evaluation
* szekeres          asymptotics of bounded-part partition counts
* bratteli          walk diagrams, antecedents, infinite trace paths
* polytope          exact rational hulls, gauges, lattice-point criteria
* free_realization  prescribed-growth supports in the free group
* cli               the ``conewalk`` command
"""

__version__ = "0.1.0"
