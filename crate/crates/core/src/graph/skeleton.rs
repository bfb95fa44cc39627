//! Skeletons of triangulations (dual graph, retraction).
