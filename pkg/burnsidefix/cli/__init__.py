"""
cli
===

Subpackage for the ``burnsidefix`` command line front end: scene documents
and the subcommands that consume them.

Imports:
  - Scene
  - load_scene
  - parse_scene
  - main
  - element_to_json
  - element_from_json
"""

from .scene import Scene, load_scene, parse_scene
from .main import main, element_to_json, element_from_json
