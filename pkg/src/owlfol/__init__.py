"""owlfol: OWL 2 Full reasoning through first-order theorem provers.

Translates RDF graphs and the OWL 2 RDF-Based semantic conditions into TPTP
first-order problems, dispatches them to external SZS-compliant provers and
model finders, and classifies outcomes against the bundled characteristic
test suite.
"""

__version__ = "0.1.0"
