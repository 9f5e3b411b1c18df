//! IRI constants for the vocabularies used across the crate.

/// RDF core vocabulary.
pub mod rdf {
    pub const NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    pub const SUBJECT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#subject";
    pub const PREDICATE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate";
    pub const OBJECT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#object";
    pub const VALUE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#value";
    pub const FIRST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
    pub const REST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
    pub const NIL: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
    pub const LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}

/// RDF Schema vocabulary.
pub mod rdfs {
    pub const NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
    pub const LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";
}

/// XML Schema datatypes.
pub mod xsd {
    pub const NS: &str = "http://www.w3.org/2001/XMLSchema#";
    pub const STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
    pub const INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
    pub const DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
    pub const DOUBLE: &str = "http://www.w3.org/2001/XMLSchema#double";
}

/// Property graph ontology terms used by the structural description.
pub mod pgo {
    pub const NS: &str = "http://ii.uwb.edu.pl/pgo#";
    pub const NODE: &str = "http://ii.uwb.edu.pl/pgo#Node";
    pub const EDGE: &str = "http://ii.uwb.edu.pl/pgo#Edge";
}

/// The prec vocabulary: structural terms plus the context rule language.
pub mod prec {
    pub const NS: &str = "http://bruy.at/prec#";

    // structural description
    pub const PROPERTY_KEY: &str = "http://bruy.at/prec#PropertyKey";
    pub const PROPERTY_KEY_VALUE: &str = "http://bruy.at/prec#PropertyKeyValue";
    pub const CREATED_NODE_LABEL: &str = "http://bruy.at/prec#CreatedNodeLabel";
    pub const CREATED_EDGE_LABEL: &str = "http://bruy.at/prec#CreatedEdgeLabel";
    pub const HAS_META_PROPERTIES: &str = "http://bruy.at/prec#hasMetaProperties";

    // rule classes
    pub const PROPERTY_RULE: &str = "http://bruy.at/prec#PropertyRule";
    pub const EDGE_RULE: &str = "http://bruy.at/prec#EdgeRule";
    pub const NODE_LABEL_RULE: &str = "http://bruy.at/prec#NodeLabelRule";
    pub const META_PROPERTY_RULE: &str = "http://bruy.at/prec#MetaPropertyRule";

    // rule fields
    pub const PROPERTY_KEY_FIELD: &str = "http://bruy.at/prec#propertyKey";
    pub const ON_NODES_WITH_LABEL: &str = "http://bruy.at/prec#onNodesWithLabel";
    pub const ON_EDGES_WITH_LABEL: &str = "http://bruy.at/prec#onEdgesWithLabel";
    pub const EDGE_LABEL: &str = "http://bruy.at/prec#edgeLabel";
    pub const SOURCE_LABEL: &str = "http://bruy.at/prec#sourceLabel";
    pub const DESTINATION_LABEL: &str = "http://bruy.at/prec#destinationLabel";
    pub const NODE_LABEL: &str = "http://bruy.at/prec#nodeLabel";
    pub const META_PROPERTY_KEY: &str = "http://bruy.at/prec#metaPropertyKey";
    pub const PRODUCED_IRI: &str = "http://bruy.at/prec#producedIRI";
    pub const TEMPLATED_BY: &str = "http://bruy.at/prec#templatedBy";

    // templates
    pub const EDGE_TEMPLATE: &str = "http://bruy.at/prec#EdgeTemplate";
    pub const PROPERTY_TEMPLATE: &str = "http://bruy.at/prec#PropertyTemplate";
    pub const COMPOSED_OF: &str = "http://bruy.at/prec#composedOf";
    pub const RDF_STAR_UNIQUE: &str = "http://bruy.at/prec#RdfStarUnique";
    pub const DIRECT_TRIPLES: &str = "http://bruy.at/prec#DirectTriples";
    pub const NODE_BASED_PROPERTIES: &str = "http://bruy.at/prec#NodeBasedProperties";

    // kind-default subjects
    pub const EDGES: &str = "http://bruy.at/prec#Edges";
    pub const PROPERTIES: &str = "http://bruy.at/prec#Properties";
}

/// Placeholder terms substituted during template instantiation.
pub mod pvar {
    pub const NS: &str = "http://bruy.at/prec-trans#";
    pub const SOURCE: &str = "http://bruy.at/prec-trans#source";
    pub const DESTINATION: &str = "http://bruy.at/prec-trans#destination";
    pub const EDGE_IRI: &str = "http://bruy.at/prec-trans#edgeIRI";
    pub const SELF: &str = "http://bruy.at/prec-trans#self";
    pub const PROPERTY_PREDICATE: &str = "http://bruy.at/prec-trans#propertyPredicate";
    pub const PROPERTY_OBJECT: &str = "http://bruy.at/prec-trans#propertyObject";
    pub const PROPERTY_NODE: &str = "http://bruy.at/prec-trans#propertyNode";
}
