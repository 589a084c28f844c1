"""Independent reference implementations used only by the tests.

None of these import the code they check: each works from raw gluing rows
(lists of ``None`` or ``(tet, perm-tuple)``) with deliberately naive methods.
"""
