# Tests for rift_workbench.faults
