#!/usr/bin/env python3
"""Regenerate the bundled characteristic test suite under src/owlfol/suite_data/.

Each test directory holds premise.ttl (the graph of an inconsistency test,
or the premise of an entailment test), conclusion.ttl (entailment tests
only), and a line-oriented meta file:

    kind: entailment | inconsistency
    expected: +
    rdfs: entailed | countersat | sat     (expected status vs the rdfs-ext profile)
    alco: entailed | countersat | sat | unknown   (advisory, vs alco-full)
    notes: free text

The rdfs line is firm; the alco line is advisory only.
"""

from __future__ import annotations

import pathlib
import sys

PREFIXES = {
    "ex": "http://www.example.org/",
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "owl": "http://www.w3.org/2002/07/owl#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "foaf": "http://xmlns.com/foaf/0.1/",
    "skos": "http://www.w3.org/2004/02/skos/core#",
}

# id -> (kind, premise, conclusion, rdfs_status, alco_status, notes)
TESTS: dict[str, tuple[str, str, str | None, str, str, str]] = {
    "001_Subgraph_Entailment": (
        "entailment",
        """\
ex:c rdfs:subClassOf ex:r .
ex:r rdf:type owl:Restriction .
ex:r owl:onProperty ex:p .
ex:r owl:someValuesFrom ex:d .
""",
        """\
ex:r rdf:type owl:Restriction .
ex:r owl:onProperty ex:p .
""",
        "entailed",
        "entailed",
        "subgraph of a partial restriction encoding",
    ),
    "002_Existential_Blank_Nodes": (
        "entailment",
        """\
ex:s ex:p _:o .
_:o ex:q ex:s .
""",
        """\
_:x ex:p _:y .
_:y ex:q _:x .
""",
        "entailed",
        "entailed",
        "blank-node existential round trip",
    ),
    "003_Blank_Nodes_for_Literals": (
        "entailment",
        'ex:s ex:p "foo" .\n',
        "ex:s ex:p _:x .\n",
        "entailed",
        "entailed",
        "literal object weakened to a blank node",
    ),
    "004_Axiomatic_Triples": (
        "entailment",
        "",
        """\
owl:Class rdf:type owl:Thing .
owl:Class rdf:type owl:Class .
owl:Class rdfs:subClassOf owl:Thing .
owl:Class owl:equivalentClass rdfs:Class .
rdfs:Datatype rdfs:subClassOf owl:Class .
""",
        "countersat",
        "countersat",
        "built-in vocabulary tautologies",
    ),
    "005_Everything_is_a_Resource": (
        "entailment",
        "ex:s ex:p ex:o .\n",
        """\
ex:s rdf:type rdfs:Resource .
ex:s rdf:type owl:Thing .
ex:p rdf:type rdfs:Resource .
ex:p rdf:type owl:Thing .
ex:p rdf:type rdf:Property .
ex:p rdf:type owl:ObjectProperty .
ex:o rdf:type rdfs:Resource .
ex:o rdf:type owl:Thing .
""",
        "countersat",
        "countersat",
        "typing of all triple nodes",
    ),
    "006_Literal_Values_represented_by_URIs_and_Blank_Nodes": (
        "entailment",
        """\
ex:u owl:sameAs "abc" .
_:x owl:sameAs "abc" .
_:x owl:sameAs ex:w .
""",
        "ex:u owl:sameAs ex:w .\n",
        "countersat",
        "countersat",
        "equality links through a literal value",
    ),
    "007_Equal_Classes": (
        "entailment",
        """\
ex:c1 owl:sameAs ex:c2 .
ex:w rdf:type ex:c1 .
ex:c rdfs:subClassOf ex:c1 .
ex:p rdfs:range ex:c1 .
""",
        """\
ex:w rdf:type ex:c2 .
ex:c rdfs:subClassOf ex:c2 .
ex:p rdfs:range ex:c2 .
""",
        "countersat",
        "countersat",
        "equal classes substitute in class axioms",
    ),
    "008_Inverse_Functional_Data_Properties": (
        "entailment",
        """\
foaf:mbox_sha1sum
  rdf:type owl:DatatypeProperty ;
  rdf:type owl:InverseFunctionalProperty .
ex:bob foaf:mbox_sha1sum "xyz" .
ex:robert foaf:mbox_sha1sum "xyz" .
""",
        "ex:bob owl:sameAs ex:robert .\n",
        "countersat",
        "countersat",
        "inverse-functional data property merges subjects",
    ),
    "009_Existential_Restriction_Entailments": (
        "entailment",
        """\
ex:p rdf:type owl:ObjectProperty .
ex:c rdf:type owl:Class .
ex:s rdf:type [
  rdf:type owl:Restriction ;
  owl:onProperty ex:p ;
  owl:someValuesFrom ex:c
] .
""",
        """\
ex:s ex:p _:x .
_:x rdf:type ex:c .
""",
        "countersat",
        "entailed",
        "existential restriction instance",
    ),
    "010_Negative_Property_Assertions": (
        "entailment",
        """\
ex:p rdf:type owl:ObjectProperty .
ex:s rdf:type [
  owl:onProperty ex:p ;
  owl:allValuesFrom [
    owl:complementOf [
      owl:oneOf ( ex:o )
    ]
  ]
] .
""",
        """\
_:z rdf:type owl:NegativePropertyAssertion .
_:z owl:sourceIndividual ex:s .
_:z owl:assertionProperty ex:p .
_:z owl:targetIndividual ex:o .
""",
        "countersat",
        "entailed",
        "classic encoding entails the explicit NPA node",
    ),
    "011_Entity_Types_as_Classes": (
        "inconsistency",
        """\
owl:Class owl:disjointWith owl:ObjectProperty .
ex:x rdf:type owl:Class .
ex:x rdf:type owl:ObjectProperty .
""",
        None,
        "sat",
        "sat",
        "disjoint entity types made contradictory",
    ),
    "012_Template_Class": (
        "entailment",
        """\
foaf:Person rdf:type owl:Class .
ex:PersonAttribute owl:intersectionOf (
  owl:DatatypeProperty
  owl:FunctionalProperty [
    rdf:type owl:Restriction ;
    owl:onProperty rdfs:domain ;
    owl:hasValue foaf:Person
  ]
) .
ex:name rdf:type ex:PersonAttribute .
ex:alice ex:name "alice" .
""",
        """\
ex:name rdf:type owl:FunctionalProperty .
ex:alice rdf:type foaf:Person .
""",
        "countersat",
        "entailed",
        "template class assigns property features",
    ),
    "013_Cliques": (
        "entailment",
        """\
ex:Clique rdf:type owl:Class .
ex:sameCliqueAs
  rdfs:subPropertyOf owl:sameAs ;
  rdfs:range ex:Clique .
ex:Clique rdfs:subClassOf [
  rdf:type owl:Restriction ;
  owl:onProperty ex:sameCliqueAs ;
  owl:someValuesFrom ex:Clique
] .
foaf:knows
  rdf:type owl:ObjectProperty ;
  owl:propertyChainAxiom (
  rdf:type
  ex:sameCliqueAs
  [ owl:inverseOf rdf:type ]
) .
ex:JoesGang rdf:type ex:Clique .
ex:alice rdf:type ex:JoesGang .
ex:bob rdf:type ex:JoesGang .
""",
        "ex:alice foaf:knows ex:bob .\n",
        "countersat",
        "unknown",
        "metaclass of cliques via chain over rdf:type",
    ),
    "014_Harry_belongs_to_some_Species": (
        "entailment",
        """\
ex:Eagle rdf:type ex:Species .
ex:Falcon rdf:type ex:Species .
ex:harry rdf:type [
  owl:unionOf ( ex:Eagle ex:Falcon )
] .
""",
        """\
ex:harry rdf:type _:x .
_:x rdf:type ex:Species .
""",
        "countersat",
        "entailed",
        "union membership under metamodeling",
    ),
    "015_Reflective_Tautologies_I": (
        "entailment",
        "",
        "owl:sameAs owl:sameAs owl:sameAs .\n",
        "countersat",
        "countersat",
        "owl:sameAs self-loop tautology",
    ),
    "016_Reflective_Tautologies_II": (
        "entailment",
        "",
        """\
owl:equivalentClass
  rdfs:subPropertyOf rdfs:subClassOf .
""",
        "countersat",
        "countersat",
        "equivalence is a subproperty of subsumption",
    ),
    "017_Builtin_Based_Definitions": (
        "entailment",
        """\
ex:notInstanceOf
  owl:propertyDisjointWith rdf:type .
ex:w rdf:type ex:c .
ex:u ex:notInstanceOf ex:c .
""",
        "ex:w owl:differentFrom ex:u .\n",
        "countersat",
        "countersat",
        "property disjoint from rdf:type",
    ),
    "018_Modified_Logical_Vocabulary_Semantics": (
        "entailment",
        """\
owl:sameAs rdfs:domain ex:Person .
ex:w owl:sameAs ex:u .
""",
        "ex:u rdf:type ex:Person .\n",
        "countersat",
        "countersat",
        "domain restriction on owl:sameAs",
    ),
    "019_Disjoint_Annotation_Properties": (
        "inconsistency",
        """\
skos:prefLabel rdf:type owl:AnnotationProperty .
skos:prefLabel rdfs:subPropertyOf rdfs:label .
skos:altLabel rdf:type owl:AnnotationProperty .
skos:altLabel rdfs:subPropertyOf rdfs:label .
skos:prefLabel owl:propertyDisjointWith skos:altLabel .
ex:foo skos:prefLabel "foo" .
ex:foo skos:altLabel "foo" .
""",
        None,
        "sat",
        "sat",
        "disjoint annotation properties on one literal",
    ),
    "020_Logical_Complications": (
        "entailment",
        """\
ex:c owl:unionOf ( ex:c1 ex:c2 ex:c3 ) .
ex:d owl:disjointWith ex:c1 .
ex:d rdfs:subClassOf [
    owl:intersectionOf (
        ex:c
        [ owl:complementOf ex:c2 ]
    )
] .
""",
        "ex:d rdfs:subClassOf ex:c3 .\n",
        "countersat",
        "unknown",
        "boolean juggling of union, complement, disjointness",
    ),
    "021_Composite_Enumerations": (
        "entailment",
        """\
ex:c1 owl:oneOf ( ex:w1 ex:w2 ) .
ex:c2 owl:oneOf ( ex:w2 ex:w3 ) .
ex:c3 owl:oneOf ( ex:w1 ex:w2 ex:w3 ) .
ex:c4 owl:unionOf ( ex:c1 ex:c2 ) .
""",
        "ex:c3 owl:equivalentClass ex:c4 .\n",
        "countersat",
        "unknown",
        "union of enumerations equals bigger enumeration",
    ),
    "022_List_Member_Access": (
        "entailment",
        """\
skos:memberList rdfs:subPropertyOf _:pL .
skos:member owl:propertyChainAxiom (
  _:pL
  rdf:first
) .
_:pL owl:propertyChainAxiom (
  _:pL
  rdf:rest
) .
ex:MyOrderedCollection
  rdf:type skos:OrderedCollection ;
  skos:memberList ( ex:X ex:Y ex:Z ) .
""",
        """\
ex:MyOrderedCollection skos:member ex:X .
ex:MyOrderedCollection skos:member ex:Y .
ex:MyOrderedCollection skos:member ex:Z .
""",
        "countersat",
        "unknown",
        "chain-driven list member access",
    ),
    "023_Unique_List_Components": (
        "entailment",
        """\
rdf:first rdf:type owl:FunctionalProperty .
ex:w rdf:type [
  rdf:type owl:Class ;
  owl:oneOf _:l
] .
_:l rdf:first ex:u .
_:l rdf:first ex:v .
_:l rdf:rest rdf:nil .
""",
        """\
ex:w owl:sameAs ex:u .
ex:w owl:sameAs ex:v .
""",
        "countersat",
        "unknown",
        "functional rdf:first on a non-linear list",
    ),
    "024_Cardinality_Restrictions_on_Complex_Properties": (
        "entailment",
        """\
ex:hasAncestor
  rdf:type owl:TransitiveProperty .
ex:Person rdfs:subClassOf [
  rdf:type owl:Restriction ;
  owl:onProperty ex:hasAncestor ;
  owl:minCardinality
    "1"^^xsd:nonNegativeInteger
] .
ex:alice rdf:type ex:Person .
ex:bob rdf:type ex:Person .
ex:alice ex:hasAncestor ex:bob .
""",
        """\
ex:bob ex:hasAncestor _:x .
ex:alice ex:hasAncestor _:x .
""",
        "countersat",
        "countersat",
        "min-cardinality on a transitive property",
    ),
    "025_Cyclic_Dependencies_between_Complex_Properties": (
        "entailment",
        """\
ex:hasUncle owl:propertyChainAxiom (
  ex:hasCousin
  ex:hasFather
) .
ex:hasCousin owl:propertyChainAxiom (
  ex:hasUncle
  [ owl:inverseOf ex:hasFather ]
) .
ex:alice ex:hasFather ex:dave .
ex:alice ex:hasCousin ex:bob .
ex:bob ex:hasFather ex:charly .
ex:bob ex:hasUncle ex:dave .
""",
        """\
ex:alice ex:hasUncle ex:charly .
ex:bob ex:hasCousin ex:alice .
""",
        "countersat",
        "unknown",
        "mutually recursive property chains",
    ),
    "026_Inferred_Property_Characteristics_I": (
        "entailment",
        """\
ex:p rdfs:domain [ owl:oneOf ( ex:w ) ] .
ex:p rdfs:range [ owl:oneOf ( ex:u ) ] .
""",
        "ex:p rdf:type owl:InverseFunctionalProperty .\n",
        "countersat",
        "unknown",
        "singleton domain and range force inverse functionality",
    ),
    "027_Inferred_Property_Characteristics_II": (
        "entailment",
        """\
owl:sameAs owl:propertyChainAxiom (
  ex:p
  [ owl:inverseOf ex:p ]
) .
""",
        "ex:p rdf:type owl:InverseFunctionalProperty .\n",
        "countersat",
        "unknown",
        "chain into owl:sameAs forces inverse functionality",
    ),
    "028_Inferred_Property_Characteristics_III": (
        "entailment",
        """\
ex:InversesOfFunctionalProperties
  owl:equivalentClass [
    rdf:type owl:Restriction ;
    owl:onProperty owl:inverseOf ;
    owl:someValuesFrom owl:FunctionalProperty
  ] .
""",
        """\
ex:InversesOfFunctionalProperties
  rdfs:subClassOf owl:InverseFunctionalProperty .
""",
        "countersat",
        "countersat",
        "custom class of inverses of functional properties",
    ),
    "029_Ex_Falso_Quodlibet": (
        "entailment",
        """\
ex:A rdf:type owl:Class .
ex:B rdf:type owl:Class .
ex:w rdf:type [
  owl:intersectionOf (
    ex:A
    [ owl:complementOf ex:A ]
  )
] .
""",
        "ex:w rdf:type ex:B .\n",
        "countersat",
        "entailed",
        "contradictory premise entails anything",
    ),
    "030_Bad_Class": (
        "inconsistency",
        """\
ex:c rdf:type owl:Class .
ex:c owl:complementOf [
  rdf:type owl:Restriction ;
  owl:onProperty rdf:type ;
  owl:hasSelf "true"^^xsd:boolean
] .
""",
        None,
        "sat",
        "sat",
        "self-typing Russell-style class",
    ),
    "031_Large_Universe": (
        "inconsistency",
        """\
owl:Thing owl:equivalentClass [
  owl:oneOf ( ex:w )
] .
""",
        None,
        "sat",
        "unknown",
        "singleton universe contradiction",
    ),
    "032_Datatype_Relationships": (
        "entailment",
        "",
        """\
xsd:decimal owl:disjointWith xsd:string .
xsd:integer rdfs:subClassOf xsd:decimal .
""",
        "countersat",
        "countersat",
        "datatype class subsumption and disjointness",
    ),
}


def prefix_header(body: str) -> str:
    lines = [
        f"@prefix {label}: <{ns}> ."
        for label, ns in PREFIXES.items()
        if f"{label}:" in body
    ]
    return "\n".join(lines) + ("\n\n" if lines else "")


def main() -> int:
    out_root = pathlib.Path(__file__).resolve().parent.parent / "src" / "owlfol" / "suite_data"
    out_root.mkdir(parents=True, exist_ok=True)
    for test_id, (kind, premise, conclusion, rdfs, alco, notes) in TESTS.items():
        d = out_root / test_id
        d.mkdir(exist_ok=True)
        (d / "premise.ttl").write_text(prefix_header(premise) + premise, encoding="utf-8")
        if conclusion is not None:
            (d / "conclusion.ttl").write_text(
                prefix_header(conclusion) + conclusion, encoding="utf-8"
            )
        meta = [
            f"kind: {kind}",
            "expected: +",
            f"rdfs: {rdfs}",
            f"alco: {alco}",
            f"notes: {notes}",
        ]
        (d / "meta").write_text("\n".join(meta) + "\n", encoding="utf-8")
    print(f"wrote {len(TESTS)} test cases under {out_root}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
