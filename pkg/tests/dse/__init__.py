# Tests for rift_workbench.dse
