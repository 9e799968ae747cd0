"""
FocusDRT

Focus-based pronoun, null-subject and reflexive resolution over discourse
representation structures, for role-annotated Portuguese (and English) input.
"""


from importlib.metadata import version

try:
    __version__ = version("focusdrt")
except Exception:
    __version__ = "undefined"
