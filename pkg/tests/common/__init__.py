# Tests for rift_workbench.common
