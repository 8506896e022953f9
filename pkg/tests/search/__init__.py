# Tests for rift_workbench.search
