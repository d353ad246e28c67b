#include "losaw/reference_tables.hpp"

#include <algorithm>

namespace losaw {

namespace {

const ReferenceValue kValues[] = {
    {"2", "continuous", 100, 0.1, 500, 1, "r2_test", "rf", 0.871},
    {"2", "continuous", 100, 0.1, 500, 1, "r2_test", "losaw-rf", 0.869},
    {"2", "continuous", 100, 0.1, 5000, 1, "r2_test", "rf", 0.901},
    {"2", "continuous", 100, 0.1, 5000, 1, "r2_test", "losaw-rf", 0.901},
    {"2", "continuous", 100, 0.1, 500, 1, "r2_ind", "rf", 0.686},
    {"2", "continuous", 100, 0.1, 500, 1, "r2_ind", "losaw-rf", 0.723},
    {"2", "continuous", 100, 0.1, 5000, 1, "r2_ind", "rf", 0.806},
    {"2", "continuous", 100, 0.1, 5000, 1, "r2_ind", "losaw-rf", 0.822},
    {"2", "continuous", 100, 0.1, 500, 1, "pr_auc", "rf", 1.000},
    {"2", "continuous", 100, 0.1, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"2", "continuous", 100, 0.1, 5000, 1, "pr_auc", "rf", 1.000},
    {"2", "continuous", 100, 0.1, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"2", "continuous", 100, 0.1, 500, 2, "r2_test", "rf", 0.830},
    {"2", "continuous", 100, 0.1, 500, 2, "r2_test", "losaw-rf", 0.823},
    {"2", "continuous", 100, 0.1, 5000, 2, "r2_test", "rf", 0.889},
    {"2", "continuous", 100, 0.1, 5000, 2, "r2_test", "losaw-rf", 0.887},
    {"2", "continuous", 100, 0.1, 500, 2, "r2_ind", "rf", 0.681},
    {"2", "continuous", 100, 0.1, 500, 2, "r2_ind", "losaw-rf", 0.709},
    {"2", "continuous", 100, 0.1, 5000, 2, "r2_ind", "rf", 0.823},
    {"2", "continuous", 100, 0.1, 5000, 2, "r2_ind", "losaw-rf", 0.849},
    {"2", "continuous", 100, 0.1, 500, 2, "pr_auc", "rf", 1.000},
    {"2", "continuous", 100, 0.1, 500, 2, "pr_auc", "losaw-rf", 0.999},
    {"2", "continuous", 100, 0.1, 5000, 2, "pr_auc", "rf", 1.000},
    {"2", "continuous", 100, 0.1, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"2", "continuous", 100, 0.1, 500, 3, "r2_test", "rf", 0.849},
    {"2", "continuous", 100, 0.1, 500, 3, "r2_test", "losaw-rf", 0.845},
    {"2", "continuous", 100, 0.1, 5000, 3, "r2_test", "rf", 0.885},
    {"2", "continuous", 100, 0.1, 5000, 3, "r2_test", "losaw-rf", 0.888},
    {"2", "continuous", 100, 0.1, 500, 3, "r2_ind", "rf", 0.315},
    {"2", "continuous", 100, 0.1, 500, 3, "r2_ind", "losaw-rf", 0.516},
    {"2", "continuous", 100, 0.1, 5000, 3, "r2_ind", "rf", 0.445},
    {"2", "continuous", 100, 0.1, 5000, 3, "r2_ind", "losaw-rf", 0.668},
    {"2", "continuous", 100, 0.1, 500, 3, "pr_auc", "rf", 0.417},
    {"2", "continuous", 100, 0.1, 500, 3, "pr_auc", "losaw-rf", 0.547},
    {"2", "continuous", 100, 0.1, 5000, 3, "pr_auc", "rf", 0.417},
    {"2", "continuous", 100, 0.1, 5000, 3, "pr_auc", "losaw-rf", 0.656},
    {"2", "continuous", 100, 0.1, 500, 4, "r2_test", "rf", 0.833},
    {"2", "continuous", 100, 0.1, 500, 4, "r2_test", "losaw-rf", 0.823},
    {"2", "continuous", 100, 0.1, 5000, 4, "r2_test", "rf", 0.879},
    {"2", "continuous", 100, 0.1, 5000, 4, "r2_test", "losaw-rf", 0.877},
    {"2", "continuous", 100, 0.1, 500, 4, "r2_ind", "rf", 0.369},
    {"2", "continuous", 100, 0.1, 500, 4, "r2_ind", "losaw-rf", 0.520},
    {"2", "continuous", 100, 0.1, 5000, 4, "r2_ind", "rf", 0.464},
    {"2", "continuous", 100, 0.1, 5000, 4, "r2_ind", "losaw-rf", 0.685},
    {"2", "continuous", 100, 0.1, 500, 4, "pr_auc", "rf", 0.513},
    {"2", "continuous", 100, 0.1, 500, 4, "pr_auc", "losaw-rf", 0.659},
    {"2", "continuous", 100, 0.1, 5000, 4, "pr_auc", "rf", 0.514},
    {"2", "continuous", 100, 0.1, 5000, 4, "pr_auc", "losaw-rf", 0.714},
    {"2", "continuous", 100, 0.1, 500, 5, "r2_test", "rf", 0.830},
    {"2", "continuous", 100, 0.1, 500, 5, "r2_test", "losaw-rf", 0.848},
    {"2", "continuous", 100, 0.1, 5000, 5, "r2_test", "rf", 0.902},
    {"2", "continuous", 100, 0.1, 5000, 5, "r2_test", "losaw-rf", 0.903},
    {"2", "continuous", 100, 0.1, 500, 5, "r2_ind", "rf", 0.752},
    {"2", "continuous", 100, 0.1, 500, 5, "r2_ind", "losaw-rf", 0.815},
    {"2", "continuous", 100, 0.1, 5000, 5, "r2_ind", "rf", 0.972},
    {"2", "continuous", 100, 0.1, 5000, 5, "r2_ind", "losaw-rf", 0.969},
    {"2", "continuous", 100, 0.1, 500, 5, "pr_auc", "rf", 0.629},
    {"2", "continuous", 100, 0.1, 500, 5, "pr_auc", "losaw-rf", 0.959},
    {"2", "continuous", 100, 0.1, 5000, 5, "pr_auc", "rf", 0.881},
    {"2", "continuous", 100, 0.1, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"2", "continuous", 100, 0.1, 500, 6, "r2_test", "rf", 0.844},
    {"2", "continuous", 100, 0.1, 500, 6, "r2_test", "losaw-rf", 0.850},
    {"2", "continuous", 100, 0.1, 5000, 6, "r2_test", "rf", 0.902},
    {"2", "continuous", 100, 0.1, 5000, 6, "r2_test", "losaw-rf", 0.903},
    {"2", "continuous", 100, 0.1, 500, 6, "r2_ind", "rf", 0.826},
    {"2", "continuous", 100, 0.1, 500, 6, "r2_ind", "losaw-rf", 0.846},
    {"2", "continuous", 100, 0.1, 5000, 6, "r2_ind", "rf", 0.979},
    {"2", "continuous", 100, 0.1, 5000, 6, "r2_ind", "losaw-rf", 0.970},
    {"2", "continuous", 100, 0.1, 500, 6, "pr_auc", "rf", 1.000},
    {"2", "continuous", 100, 0.1, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"2", "continuous", 100, 0.1, 5000, 6, "pr_auc", "rf", 1.000},
    {"2", "continuous", 100, 0.1, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"2", "continuous", 100, 0.1, 500, 7, "r2_test", "rf", 0.829},
    {"2", "continuous", 100, 0.1, 500, 7, "r2_test", "losaw-rf", 0.843},
    {"2", "continuous", 100, 0.1, 5000, 7, "r2_test", "rf", 0.898},
    {"2", "continuous", 100, 0.1, 5000, 7, "r2_test", "losaw-rf", 0.901},
    {"2", "continuous", 100, 0.1, 500, 7, "r2_ind", "rf", 0.741},
    {"2", "continuous", 100, 0.1, 500, 7, "r2_ind", "losaw-rf", 0.805},
    {"2", "continuous", 100, 0.1, 5000, 7, "r2_ind", "rf", 0.949},
    {"2", "continuous", 100, 0.1, 5000, 7, "r2_ind", "losaw-rf", 0.964},
    {"2", "continuous", 100, 0.1, 500, 7, "pr_auc", "rf", 0.734},
    {"2", "continuous", 100, 0.1, 500, 7, "pr_auc", "losaw-rf", 0.958},
    {"2", "continuous", 100, 0.1, 5000, 7, "pr_auc", "rf", 0.919},
    {"2", "continuous", 100, 0.1, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"3", "discrete", 100, 0.1, 500, 1, "r2_test", "rf", 0.880},
    {"3", "discrete", 100, 0.1, 500, 1, "r2_test", "losaw-rf", 0.881},
    {"3", "discrete", 100, 0.1, 5000, 1, "r2_test", "rf", 0.904},
    {"3", "discrete", 100, 0.1, 5000, 1, "r2_test", "losaw-rf", 0.904},
    {"3", "discrete", 100, 0.1, 500, 1, "r2_ind", "rf", 0.705},
    {"3", "discrete", 100, 0.1, 500, 1, "r2_ind", "losaw-rf", 0.713},
    {"3", "discrete", 100, 0.1, 5000, 1, "r2_ind", "rf", 0.945},
    {"3", "discrete", 100, 0.1, 5000, 1, "r2_ind", "losaw-rf", 0.953},
    {"3", "discrete", 100, 0.1, 500, 1, "pr_auc", "rf", 1.000},
    {"3", "discrete", 100, 0.1, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"3", "discrete", 100, 0.1, 5000, 1, "pr_auc", "rf", 1.000},
    {"3", "discrete", 100, 0.1, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"3", "discrete", 100, 0.1, 500, 2, "r2_test", "rf", 0.874},
    {"3", "discrete", 100, 0.1, 500, 2, "r2_test", "losaw-rf", 0.867},
    {"3", "discrete", 100, 0.1, 5000, 2, "r2_test", "rf", 0.897},
    {"3", "discrete", 100, 0.1, 5000, 2, "r2_test", "losaw-rf", 0.898},
    {"3", "discrete", 100, 0.1, 500, 2, "r2_ind", "rf", 0.718},
    {"3", "discrete", 100, 0.1, 500, 2, "r2_ind", "losaw-rf", 0.703},
    {"3", "discrete", 100, 0.1, 5000, 2, "r2_ind", "rf", 0.907},
    {"3", "discrete", 100, 0.1, 5000, 2, "r2_ind", "losaw-rf", 0.923},
    {"3", "discrete", 100, 0.1, 500, 2, "pr_auc", "rf", 1.000},
    {"3", "discrete", 100, 0.1, 500, 2, "pr_auc", "losaw-rf", 1.000},
    {"3", "discrete", 100, 0.1, 5000, 2, "pr_auc", "rf", 1.000},
    {"3", "discrete", 100, 0.1, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"3", "discrete", 100, 0.1, 500, 3, "r2_test", "rf", 0.885},
    {"3", "discrete", 100, 0.1, 500, 3, "r2_test", "losaw-rf", 0.886},
    {"3", "discrete", 100, 0.1, 5000, 3, "r2_test", "rf", 0.898},
    {"3", "discrete", 100, 0.1, 5000, 3, "r2_test", "losaw-rf", 0.902},
    {"3", "discrete", 100, 0.1, 500, 3, "r2_ind", "rf", 0.265},
    {"3", "discrete", 100, 0.1, 500, 3, "r2_ind", "losaw-rf", 0.358},
    {"3", "discrete", 100, 0.1, 5000, 3, "r2_ind", "rf", 0.600},
    {"3", "discrete", 100, 0.1, 5000, 3, "r2_ind", "losaw-rf", 0.787},
    {"3", "discrete", 100, 0.1, 500, 3, "pr_auc", "rf", 0.417},
    {"3", "discrete", 100, 0.1, 500, 3, "pr_auc", "losaw-rf", 0.417},
    {"3", "discrete", 100, 0.1, 5000, 3, "pr_auc", "rf", 0.417},
    {"3", "discrete", 100, 0.1, 5000, 3, "pr_auc", "losaw-rf", 0.999},
    {"3", "discrete", 100, 0.1, 500, 4, "r2_test", "rf", 0.864},
    {"3", "discrete", 100, 0.1, 500, 4, "r2_test", "losaw-rf", 0.863},
    {"3", "discrete", 100, 0.1, 5000, 4, "r2_test", "rf", 0.897},
    {"3", "discrete", 100, 0.1, 5000, 4, "r2_test", "losaw-rf", 0.901},
    {"3", "discrete", 100, 0.1, 500, 4, "r2_ind", "rf", 0.306},
    {"3", "discrete", 100, 0.1, 500, 4, "r2_ind", "losaw-rf", 0.378},
    {"3", "discrete", 100, 0.1, 5000, 4, "r2_ind", "rf", 0.592},
    {"3", "discrete", 100, 0.1, 5000, 4, "r2_ind", "losaw-rf", 0.799},
    {"3", "discrete", 100, 0.1, 500, 4, "pr_auc", "rf", 0.485},
    {"3", "discrete", 100, 0.1, 500, 4, "pr_auc", "losaw-rf", 0.510},
    {"3", "discrete", 100, 0.1, 5000, 4, "pr_auc", "rf", 0.514},
    {"3", "discrete", 100, 0.1, 5000, 4, "pr_auc", "losaw-rf", 0.961},
    {"3", "discrete", 100, 0.1, 500, 5, "r2_test", "rf", 0.868},
    {"3", "discrete", 100, 0.1, 500, 5, "r2_test", "losaw-rf", 0.871},
    {"3", "discrete", 100, 0.1, 5000, 5, "r2_test", "rf", 0.906},
    {"3", "discrete", 100, 0.1, 5000, 5, "r2_test", "losaw-rf", 0.908},
    {"3", "discrete", 100, 0.1, 500, 5, "r2_ind", "rf", 0.656},
    {"3", "discrete", 100, 0.1, 500, 5, "r2_ind", "losaw-rf", 0.693},
    {"3", "discrete", 100, 0.1, 5000, 5, "r2_ind", "rf", 0.899},
    {"3", "discrete", 100, 0.1, 5000, 5, "r2_ind", "losaw-rf", 0.959},
    {"3", "discrete", 100, 0.1, 500, 5, "pr_auc", "rf", 0.571},
    {"3", "discrete", 100, 0.1, 500, 5, "pr_auc", "losaw-rf", 0.797},
    {"3", "discrete", 100, 0.1, 5000, 5, "pr_auc", "rf", 0.702},
    {"3", "discrete", 100, 0.1, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"3", "discrete", 100, 0.1, 500, 6, "r2_test", "rf", 0.873},
    {"3", "discrete", 100, 0.1, 500, 6, "r2_test", "losaw-rf", 0.875},
    {"3", "discrete", 100, 0.1, 5000, 6, "r2_test", "rf", 0.906},
    {"3", "discrete", 100, 0.1, 5000, 6, "r2_test", "losaw-rf", 0.907},
    {"3", "discrete", 100, 0.1, 500, 6, "r2_ind", "rf", 0.780},
    {"3", "discrete", 100, 0.1, 500, 6, "r2_ind", "losaw-rf", 0.810},
    {"3", "discrete", 100, 0.1, 5000, 6, "r2_ind", "rf", 0.961},
    {"3", "discrete", 100, 0.1, 5000, 6, "r2_ind", "losaw-rf", 0.972},
    {"3", "discrete", 100, 0.1, 500, 6, "pr_auc", "rf", 1.000},
    {"3", "discrete", 100, 0.1, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"3", "discrete", 100, 0.1, 5000, 6, "pr_auc", "rf", 1.000},
    {"3", "discrete", 100, 0.1, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"3", "discrete", 100, 0.1, 500, 7, "r2_test", "rf", 0.879},
    {"3", "discrete", 100, 0.1, 500, 7, "r2_test", "losaw-rf", 0.879},
    {"3", "discrete", 100, 0.1, 5000, 7, "r2_test", "rf", 0.905},
    {"3", "discrete", 100, 0.1, 5000, 7, "r2_test", "losaw-rf", 0.906},
    {"3", "discrete", 100, 0.1, 500, 7, "r2_ind", "rf", 0.695},
    {"3", "discrete", 100, 0.1, 500, 7, "r2_ind", "losaw-rf", 0.738},
    {"3", "discrete", 100, 0.1, 5000, 7, "r2_ind", "rf", 0.871},
    {"3", "discrete", 100, 0.1, 5000, 7, "r2_ind", "losaw-rf", 0.932},
    {"3", "discrete", 100, 0.1, 500, 7, "pr_auc", "rf", 0.696},
    {"3", "discrete", 100, 0.1, 500, 7, "pr_auc", "losaw-rf", 0.797},
    {"3", "discrete", 100, 0.1, 5000, 7, "pr_auc", "rf", 0.797},
    {"3", "discrete", 100, 0.1, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"5", "discrete", 1000, 1.0, 50000, 8, "r2_test", "gd", 0.451},
    {"5", "discrete", 1000, 1.0, 50000, 8, "r2_test", "losaw-gd", 0.439},
    {"5", "discrete", 1000, 1.0, 50000, 8, "r2_ind", "gd", 0.409},
    {"5", "discrete", 1000, 1.0, 50000, 8, "r2_ind", "losaw-gd", 0.399},
    {"5", "discrete", 1000, 1.0, 50000, 8, "pr_auc", "gd", 1.000},
    {"5", "discrete", 1000, 1.0, 50000, 8, "pr_auc", "losaw-gd", 1.000},
    {"5", "discrete", 1000, 1.0, 50000, 8, "fi_gap", "gd", 0.193},
    {"5", "discrete", 1000, 1.0, 50000, 8, "fi_gap", "losaw-gd", 0.213},
    {"5", "discrete", 1000, 1.0, 50000, 9, "r2_test", "gd", 0.452},
    {"5", "discrete", 1000, 1.0, 50000, 9, "r2_test", "losaw-gd", 0.441},
    {"5", "discrete", 1000, 1.0, 50000, 9, "r2_ind", "gd", 0.106},
    {"5", "discrete", 1000, 1.0, 50000, 9, "r2_ind", "losaw-gd", 0.068},
    {"5", "discrete", 1000, 1.0, 50000, 9, "pr_auc", "gd", 0.999},
    {"5", "discrete", 1000, 1.0, 50000, 9, "pr_auc", "losaw-gd", 1.000},
    {"5", "discrete", 1000, 1.0, 50000, 9, "fi_gap", "gd", 0.293},
    {"5", "discrete", 1000, 1.0, 50000, 9, "fi_gap", "losaw-gd", 0.313},
    {"5", "discrete", 1000, 1.0, 50000, 10, "r2_test", "gd", 0.355},
    {"5", "discrete", 1000, 1.0, 50000, 10, "r2_test", "losaw-gd", 0.366},
    {"5", "discrete", 1000, 1.0, 50000, 10, "r2_ind", "gd", 0.128},
    {"5", "discrete", 1000, 1.0, 50000, 10, "r2_ind", "losaw-gd", 0.138},
    {"5", "discrete", 1000, 1.0, 50000, 10, "pr_auc", "gd", 0.970},
    {"5", "discrete", 1000, 1.0, 50000, 10, "pr_auc", "losaw-gd", 0.983},
    {"5", "discrete", 1000, 1.0, 50000, 10, "fi_gap", "gd", 0.009},
    {"5", "discrete", 1000, 1.0, 50000, 10, "fi_gap", "losaw-gd", 0.064},
    {"A1", "discrete", 10, 0.1, 500, 1, "r2_test", "rf", 0.870},
    {"A1", "discrete", 10, 0.1, 500, 1, "r2_test", "losaw-rf", 0.878},
    {"A1", "discrete", 10, 0.1, 5000, 1, "r2_test", "rf", 0.903},
    {"A1", "discrete", 10, 0.1, 5000, 1, "r2_test", "losaw-rf", 0.905},
    {"A1", "discrete", 10, 1.0, 500, 1, "r2_test", "rf", 0.465},
    {"A1", "discrete", 10, 1.0, 500, 1, "r2_test", "losaw-rf", 0.462},
    {"A1", "discrete", 10, 1.0, 5000, 1, "r2_test", "rf", 0.504},
    {"A1", "discrete", 10, 1.0, 5000, 1, "r2_test", "losaw-rf", 0.504},
    {"A1", "discrete", 10, 0.1, 500, 1, "r2_ind", "rf", 0.590},
    {"A1", "discrete", 10, 0.1, 500, 1, "r2_ind", "losaw-rf", 0.685},
    {"A1", "discrete", 10, 0.1, 5000, 1, "r2_ind", "rf", 0.918},
    {"A1", "discrete", 10, 0.1, 5000, 1, "r2_ind", "losaw-rf", 0.938},
    {"A1", "discrete", 10, 1.0, 500, 1, "r2_ind", "rf", 0.615},
    {"A1", "discrete", 10, 1.0, 500, 1, "r2_ind", "losaw-rf", 0.621},
    {"A1", "discrete", 10, 1.0, 5000, 1, "r2_ind", "rf", 0.912},
    {"A1", "discrete", 10, 1.0, 5000, 1, "r2_ind", "losaw-rf", 0.911},
    {"A1", "discrete", 10, 0.1, 500, 1, "pr_auc", "rf", 1.000},
    {"A1", "discrete", 10, 0.1, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 0.1, 5000, 1, "pr_auc", "rf", 1.000},
    {"A1", "discrete", 10, 0.1, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 1.0, 500, 1, "pr_auc", "rf", 0.997},
    {"A1", "discrete", 10, 1.0, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 1.0, 5000, 1, "pr_auc", "rf", 1.000},
    {"A1", "discrete", 10, 1.0, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 0.1, 500, 2, "r2_test", "rf", 0.864},
    {"A1", "discrete", 10, 0.1, 500, 2, "r2_test", "losaw-rf", 0.872},
    {"A1", "discrete", 10, 0.1, 5000, 2, "r2_test", "rf", 0.891},
    {"A1", "discrete", 10, 0.1, 5000, 2, "r2_test", "losaw-rf", 0.892},
    {"A1", "discrete", 10, 1.0, 500, 2, "r2_test", "rf", 0.474},
    {"A1", "discrete", 10, 1.0, 500, 2, "r2_test", "losaw-rf", 0.470},
    {"A1", "discrete", 10, 1.0, 5000, 2, "r2_test", "rf", 0.475},
    {"A1", "discrete", 10, 1.0, 5000, 2, "r2_test", "losaw-rf", 0.475},
    {"A1", "discrete", 10, 0.1, 500, 2, "r2_ind", "rf", 0.705},
    {"A1", "discrete", 10, 0.1, 500, 2, "r2_ind", "losaw-rf", 0.750},
    {"A1", "discrete", 10, 0.1, 5000, 2, "r2_ind", "rf", 0.876},
    {"A1", "discrete", 10, 0.1, 5000, 2, "r2_ind", "losaw-rf", 0.905},
    {"A1", "discrete", 10, 1.0, 500, 2, "r2_ind", "rf", 0.651},
    {"A1", "discrete", 10, 1.0, 500, 2, "r2_ind", "losaw-rf", 0.649},
    {"A1", "discrete", 10, 1.0, 5000, 2, "r2_ind", "rf", 0.869},
    {"A1", "discrete", 10, 1.0, 5000, 2, "r2_ind", "losaw-rf", 0.872},
    {"A1", "discrete", 10, 0.1, 500, 2, "pr_auc", "rf", 0.999},
    {"A1", "discrete", 10, 0.1, 500, 2, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 0.1, 5000, 2, "pr_auc", "rf", 1.000},
    {"A1", "discrete", 10, 0.1, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 1.0, 500, 2, "pr_auc", "rf", 0.998},
    {"A1", "discrete", 10, 1.0, 500, 2, "pr_auc", "losaw-rf", 0.987},
    {"A1", "discrete", 10, 1.0, 5000, 2, "pr_auc", "rf", 1.000},
    {"A1", "discrete", 10, 1.0, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 0.1, 500, 3, "r2_test", "rf", 0.883},
    {"A1", "discrete", 10, 0.1, 500, 3, "r2_test", "losaw-rf", 0.889},
    {"A1", "discrete", 10, 0.1, 5000, 3, "r2_test", "rf", 0.904},
    {"A1", "discrete", 10, 0.1, 5000, 3, "r2_test", "losaw-rf", 0.907},
    {"A1", "discrete", 10, 1.0, 500, 3, "r2_test", "rf", 0.459},
    {"A1", "discrete", 10, 1.0, 500, 3, "r2_test", "losaw-rf", 0.456},
    {"A1", "discrete", 10, 1.0, 5000, 3, "r2_test", "rf", 0.506},
    {"A1", "discrete", 10, 1.0, 5000, 3, "r2_test", "losaw-rf", 0.507},
    {"A1", "discrete", 10, 0.1, 500, 3, "r2_ind", "rf", 0.466},
    {"A1", "discrete", 10, 0.1, 500, 3, "r2_ind", "losaw-rf", 0.629},
    {"A1", "discrete", 10, 0.1, 5000, 3, "r2_ind", "rf", 0.647},
    {"A1", "discrete", 10, 0.1, 5000, 3, "r2_ind", "losaw-rf", 0.804},
    {"A1", "discrete", 10, 1.0, 500, 3, "r2_ind", "rf", 0.392},
    {"A1", "discrete", 10, 1.0, 500, 3, "r2_ind", "losaw-rf", 0.487},
    {"A1", "discrete", 10, 1.0, 5000, 3, "r2_ind", "rf", 0.634},
    {"A1", "discrete", 10, 1.0, 5000, 3, "r2_ind", "losaw-rf", 0.735},
    {"A1", "discrete", 10, 0.1, 500, 3, "pr_auc", "rf", 0.417},
    {"A1", "discrete", 10, 0.1, 500, 3, "pr_auc", "losaw-rf", 0.976},
    {"A1", "discrete", 10, 0.1, 5000, 3, "pr_auc", "rf", 0.417},
    {"A1", "discrete", 10, 0.1, 5000, 3, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 1.0, 500, 3, "pr_auc", "rf", 0.433},
    {"A1", "discrete", 10, 1.0, 500, 3, "pr_auc", "losaw-rf", 0.725},
    {"A1", "discrete", 10, 1.0, 5000, 3, "pr_auc", "rf", 0.417},
    {"A1", "discrete", 10, 1.0, 5000, 3, "pr_auc", "losaw-rf", 0.986},
    {"A1", "discrete", 10, 0.1, 500, 4, "r2_test", "rf", 0.878},
    {"A1", "discrete", 10, 0.1, 500, 4, "r2_test", "losaw-rf", 0.882},
    {"A1", "discrete", 10, 0.1, 5000, 4, "r2_test", "rf", 0.900},
    {"A1", "discrete", 10, 0.1, 5000, 4, "r2_test", "losaw-rf", 0.903},
    {"A1", "discrete", 10, 1.0, 500, 4, "r2_test", "rf", 0.468},
    {"A1", "discrete", 10, 1.0, 500, 4, "r2_test", "losaw-rf", 0.466},
    {"A1", "discrete", 10, 1.0, 5000, 4, "r2_test", "rf", 0.498},
    {"A1", "discrete", 10, 1.0, 5000, 4, "r2_test", "losaw-rf", 0.499},
    {"A1", "discrete", 10, 0.1, 500, 4, "r2_ind", "rf", 0.439},
    {"A1", "discrete", 10, 0.1, 500, 4, "r2_ind", "losaw-rf", 0.532},
    {"A1", "discrete", 10, 0.1, 5000, 4, "r2_ind", "rf", 0.680},
    {"A1", "discrete", 10, 0.1, 5000, 4, "r2_ind", "losaw-rf", 0.828},
    {"A1", "discrete", 10, 1.0, 500, 4, "r2_ind", "rf", 0.508},
    {"A1", "discrete", 10, 1.0, 500, 4, "r2_ind", "losaw-rf", 0.586},
    {"A1", "discrete", 10, 1.0, 5000, 4, "r2_ind", "rf", 0.652},
    {"A1", "discrete", 10, 1.0, 5000, 4, "r2_ind", "losaw-rf", 0.756},
    {"A1", "discrete", 10, 0.1, 500, 4, "pr_auc", "rf", 0.516},
    {"A1", "discrete", 10, 0.1, 500, 4, "pr_auc", "losaw-rf", 0.803},
    {"A1", "discrete", 10, 0.1, 5000, 4, "pr_auc", "rf", 0.515},
    {"A1", "discrete", 10, 0.1, 5000, 4, "pr_auc", "losaw-rf", 0.929},
    {"A1", "discrete", 10, 1.0, 500, 4, "pr_auc", "rf", 0.558},
    {"A1", "discrete", 10, 1.0, 500, 4, "pr_auc", "losaw-rf", 0.873},
    {"A1", "discrete", 10, 1.0, 5000, 4, "pr_auc", "rf", 0.517},
    {"A1", "discrete", 10, 1.0, 5000, 4, "pr_auc", "losaw-rf", 0.922},
    {"A1", "discrete", 10, 0.1, 500, 5, "r2_test", "rf", 0.882},
    {"A1", "discrete", 10, 0.1, 500, 5, "r2_test", "losaw-rf", 0.888},
    {"A1", "discrete", 10, 0.1, 5000, 5, "r2_test", "rf", 0.902},
    {"A1", "discrete", 10, 0.1, 5000, 5, "r2_test", "losaw-rf", 0.904},
    {"A1", "discrete", 10, 1.0, 500, 5, "r2_test", "rf", 0.473},
    {"A1", "discrete", 10, 1.0, 500, 5, "r2_test", "losaw-rf", 0.471},
    {"A1", "discrete", 10, 1.0, 5000, 5, "r2_test", "rf", 0.482},
    {"A1", "discrete", 10, 1.0, 5000, 5, "r2_test", "losaw-rf", 0.484},
    {"A1", "discrete", 10, 0.1, 500, 5, "r2_ind", "rf", 0.787},
    {"A1", "discrete", 10, 0.1, 500, 5, "r2_ind", "losaw-rf", 0.854},
    {"A1", "discrete", 10, 0.1, 5000, 5, "r2_ind", "rf", 0.895},
    {"A1", "discrete", 10, 0.1, 5000, 5, "r2_ind", "losaw-rf", 0.940},
    {"A1", "discrete", 10, 1.0, 500, 5, "r2_ind", "rf", 0.693},
    {"A1", "discrete", 10, 1.0, 500, 5, "r2_ind", "losaw-rf", 0.744},
    {"A1", "discrete", 10, 1.0, 5000, 5, "r2_ind", "rf", 0.857},
    {"A1", "discrete", 10, 1.0, 5000, 5, "r2_ind", "losaw-rf", 0.896},
    {"A1", "discrete", 10, 0.1, 500, 5, "pr_auc", "rf", 0.948},
    {"A1", "discrete", 10, 0.1, 500, 5, "pr_auc", "losaw-rf", 0.999},
    {"A1", "discrete", 10, 0.1, 5000, 5, "pr_auc", "rf", 0.904},
    {"A1", "discrete", 10, 0.1, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 1.0, 500, 5, "pr_auc", "rf", 0.810},
    {"A1", "discrete", 10, 1.0, 500, 5, "pr_auc", "losaw-rf", 0.928},
    {"A1", "discrete", 10, 1.0, 5000, 5, "pr_auc", "rf", 0.993},
    {"A1", "discrete", 10, 1.0, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 0.1, 500, 6, "r2_test", "rf", 0.881},
    {"A1", "discrete", 10, 0.1, 500, 6, "r2_test", "losaw-rf", 0.888},
    {"A1", "discrete", 10, 0.1, 5000, 6, "r2_test", "rf", 0.904},
    {"A1", "discrete", 10, 0.1, 5000, 6, "r2_test", "losaw-rf", 0.905},
    {"A1", "discrete", 10, 1.0, 500, 6, "r2_test", "rf", 0.461},
    {"A1", "discrete", 10, 1.0, 500, 6, "r2_test", "losaw-rf", 0.461},
    {"A1", "discrete", 10, 1.0, 5000, 6, "r2_test", "rf", 0.482},
    {"A1", "discrete", 10, 1.0, 5000, 6, "r2_test", "losaw-rf", 0.482},
    {"A1", "discrete", 10, 0.1, 500, 6, "r2_ind", "rf", 0.781},
    {"A1", "discrete", 10, 0.1, 500, 6, "r2_ind", "losaw-rf", 0.854},
    {"A1", "discrete", 10, 0.1, 5000, 6, "r2_ind", "rf", 0.943},
    {"A1", "discrete", 10, 0.1, 5000, 6, "r2_ind", "losaw-rf", 0.958},
    {"A1", "discrete", 10, 1.0, 500, 6, "r2_ind", "rf", 0.738},
    {"A1", "discrete", 10, 1.0, 500, 6, "r2_ind", "losaw-rf", 0.771},
    {"A1", "discrete", 10, 1.0, 5000, 6, "r2_ind", "rf", 0.928},
    {"A1", "discrete", 10, 1.0, 5000, 6, "r2_ind", "losaw-rf", 0.936},
    {"A1", "discrete", 10, 0.1, 500, 6, "pr_auc", "rf", 1.000},
    {"A1", "discrete", 10, 0.1, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 0.1, 5000, 6, "pr_auc", "rf", 1.000},
    {"A1", "discrete", 10, 0.1, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 1.0, 500, 6, "pr_auc", "rf", 0.993},
    {"A1", "discrete", 10, 1.0, 500, 6, "pr_auc", "losaw-rf", 0.998},
    {"A1", "discrete", 10, 1.0, 5000, 6, "pr_auc", "rf", 1.000},
    {"A1", "discrete", 10, 1.0, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A1", "discrete", 10, 0.1, 500, 7, "r2_test", "rf", 0.879},
    {"A1", "discrete", 10, 0.1, 500, 7, "r2_test", "losaw-rf", 0.888},
    {"A1", "discrete", 10, 0.1, 5000, 7, "r2_test", "rf", 0.906},
    {"A1", "discrete", 10, 0.1, 5000, 7, "r2_test", "losaw-rf", 0.907},
    {"A1", "discrete", 10, 1.0, 500, 7, "r2_test", "rf", 0.470},
    {"A1", "discrete", 10, 1.0, 500, 7, "r2_test", "losaw-rf", 0.466},
    {"A1", "discrete", 10, 1.0, 5000, 7, "r2_test", "rf", 0.486},
    {"A1", "discrete", 10, 1.0, 5000, 7, "r2_test", "losaw-rf", 0.486},
    {"A1", "discrete", 10, 0.1, 500, 7, "r2_ind", "rf", 0.662},
    {"A1", "discrete", 10, 0.1, 500, 7, "r2_ind", "losaw-rf", 0.756},
    {"A1", "discrete", 10, 0.1, 5000, 7, "r2_ind", "rf", 0.874},
    {"A1", "discrete", 10, 0.1, 5000, 7, "r2_ind", "losaw-rf", 0.928},
    {"A1", "discrete", 10, 1.0, 500, 7, "r2_ind", "rf", 0.631},
    {"A1", "discrete", 10, 1.0, 500, 7, "r2_ind", "losaw-rf", 0.674},
    {"A1", "discrete", 10, 1.0, 5000, 7, "r2_ind", "rf", 0.844},
    {"A1", "discrete", 10, 1.0, 5000, 7, "r2_ind", "losaw-rf", 0.882},
    {"A1", "discrete", 10, 0.1, 500, 7, "pr_auc", "rf", 0.706},
    {"A1", "discrete", 10, 0.1, 500, 7, "pr_auc", "losaw-rf", 0.936},
    {"A1", "discrete", 10, 0.1, 5000, 7, "pr_auc", "rf", 0.818},
    {"A1", "discrete", 10, 0.1, 5000, 7, "pr_auc", "losaw-rf", 0.993},
    {"A1", "discrete", 10, 1.0, 500, 7, "pr_auc", "rf", 0.696},
    {"A1", "discrete", 10, 1.0, 500, 7, "pr_auc", "losaw-rf", 0.871},
    {"A1", "discrete", 10, 1.0, 5000, 7, "pr_auc", "rf", 0.820},
    {"A1", "discrete", 10, 1.0, 5000, 7, "pr_auc", "losaw-rf", 0.976},
    {"A2", "continuous", 10, 0.1, 500, 1, "r2_test", "rf", 0.873},
    {"A2", "continuous", 10, 0.1, 500, 1, "r2_test", "losaw-rf", 0.874},
    {"A2", "continuous", 10, 0.1, 5000, 1, "r2_test", "rf", 0.898},
    {"A2", "continuous", 10, 0.1, 5000, 1, "r2_test", "losaw-rf", 0.989},
    {"A2", "continuous", 10, 1.0, 500, 1, "r2_test", "rf", 0.462},
    {"A2", "continuous", 10, 1.0, 500, 1, "r2_test", "losaw-rf", 0.457},
    {"A2", "continuous", 10, 1.0, 5000, 1, "r2_test", "rf", 0.487},
    {"A2", "continuous", 10, 1.0, 5000, 1, "r2_test", "losaw-rf", 0.488},
    {"A2", "continuous", 10, 0.1, 500, 1, "r2_ind", "rf", 0.642},
    {"A2", "continuous", 10, 0.1, 500, 1, "r2_ind", "losaw-rf", 0.678},
    {"A2", "continuous", 10, 0.1, 5000, 1, "r2_ind", "rf", 0.769},
    {"A2", "continuous", 10, 0.1, 5000, 1, "r2_ind", "losaw-rf", 0.783},
    {"A2", "continuous", 10, 1.0, 500, 1, "r2_ind", "rf", 0.599},
    {"A2", "continuous", 10, 1.0, 500, 1, "r2_ind", "losaw-rf", 0.616},
    {"A2", "continuous", 10, 1.0, 5000, 1, "r2_ind", "rf", 0.759},
    {"A2", "continuous", 10, 1.0, 5000, 1, "r2_ind", "losaw-rf", 0.772},
    {"A2", "continuous", 10, 0.1, 500, 1, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 0.1, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 0.1, 5000, 1, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 0.1, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 1.0, 500, 1, "pr_auc", "rf", 0.997},
    {"A2", "continuous", 10, 1.0, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 1.0, 5000, 1, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 1.0, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 0.1, 500, 2, "r2_test", "rf", 0.848},
    {"A2", "continuous", 10, 0.1, 500, 2, "r2_test", "losaw-rf", 0.846},
    {"A2", "continuous", 10, 0.1, 5000, 2, "r2_test", "rf", 0.889},
    {"A2", "continuous", 10, 0.1, 5000, 2, "r2_test", "losaw-rf", 0.887},
    {"A2", "continuous", 10, 1.0, 500, 2, "r2_test", "rf", 0.442},
    {"A2", "continuous", 10, 1.0, 500, 2, "r2_test", "losaw-rf", 0.435},
    {"A2", "continuous", 10, 1.0, 5000, 2, "r2_test", "rf", 0.483},
    {"A2", "continuous", 10, 1.0, 5000, 2, "r2_test", "losaw-rf", 0.479},
    {"A2", "continuous", 10, 0.1, 500, 2, "r2_ind", "rf", 0.667},
    {"A2", "continuous", 10, 0.1, 500, 2, "r2_ind", "losaw-rf", 0.695},
    {"A2", "continuous", 10, 0.1, 5000, 2, "r2_ind", "rf", 0.797},
    {"A2", "continuous", 10, 0.1, 5000, 2, "r2_ind", "losaw-rf", 0.820},
    {"A2", "continuous", 10, 1.0, 500, 2, "r2_ind", "rf", 0.611},
    {"A2", "continuous", 10, 1.0, 500, 2, "r2_ind", "losaw-rf", 0.610},
    {"A2", "continuous", 10, 1.0, 5000, 2, "r2_ind", "rf", 0.782},
    {"A2", "continuous", 10, 1.0, 5000, 2, "r2_ind", "losaw-rf", 0.788},
    {"A2", "continuous", 10, 0.1, 500, 2, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 0.1, 500, 2, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 0.1, 5000, 2, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 0.1, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 1.0, 500, 2, "pr_auc", "rf", 0.976},
    {"A2", "continuous", 10, 1.0, 500, 2, "pr_auc", "losaw-rf", 0.960},
    {"A2", "continuous", 10, 1.0, 5000, 2, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 1.0, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 0.1, 500, 3, "r2_test", "rf", 0.862},
    {"A2", "continuous", 10, 0.1, 500, 3, "r2_test", "losaw-rf", 0.859},
    {"A2", "continuous", 10, 0.1, 5000, 3, "r2_test", "rf", 0.891},
    {"A2", "continuous", 10, 0.1, 5000, 3, "r2_test", "losaw-rf", 0.891},
    {"A2", "continuous", 10, 1.0, 500, 3, "r2_test", "rf", 0.460},
    {"A2", "continuous", 10, 1.0, 500, 3, "r2_test", "losaw-rf", 0.452},
    {"A2", "continuous", 10, 1.0, 5000, 3, "r2_test", "rf", 0.484},
    {"A2", "continuous", 10, 1.0, 5000, 3, "r2_test", "losaw-rf", 0.483},
    {"A2", "continuous", 10, 0.1, 500, 3, "r2_ind", "rf", 0.419},
    {"A2", "continuous", 10, 0.1, 500, 3, "r2_ind", "losaw-rf", 0.530},
    {"A2", "continuous", 10, 0.1, 5000, 3, "r2_ind", "rf", 0.520},
    {"A2", "continuous", 10, 0.1, 5000, 3, "r2_ind", "losaw-rf", 0.652},
    {"A2", "continuous", 10, 1.0, 500, 3, "r2_ind", "rf", 0.424},
    {"A2", "continuous", 10, 1.0, 500, 3, "r2_ind", "losaw-rf", 0.500},
    {"A2", "continuous", 10, 1.0, 5000, 3, "r2_ind", "rf", 0.524},
    {"A2", "continuous", 10, 1.0, 5000, 3, "r2_ind", "losaw-rf", 0.654},
    {"A2", "continuous", 10, 0.1, 500, 3, "pr_auc", "rf", 0.417},
    {"A2", "continuous", 10, 0.1, 500, 3, "pr_auc", "losaw-rf", 0.543},
    {"A2", "continuous", 10, 0.1, 5000, 3, "pr_auc", "rf", 0.417},
    {"A2", "continuous", 10, 0.1, 5000, 3, "pr_auc", "losaw-rf", 0.688},
    {"A2", "continuous", 10, 1.0, 500, 3, "pr_auc", "rf", 0.424},
    {"A2", "continuous", 10, 1.0, 500, 3, "pr_auc", "losaw-rf", 0.699},
    {"A2", "continuous", 10, 1.0, 5000, 3, "pr_auc", "rf", 0.417},
    {"A2", "continuous", 10, 1.0, 5000, 3, "pr_auc", "losaw-rf", 0.815},
    {"A2", "continuous", 10, 0.1, 500, 4, "r2_test", "rf", 0.854},
    {"A2", "continuous", 10, 0.1, 500, 4, "r2_test", "losaw-rf", 0.850},
    {"A2", "continuous", 10, 0.1, 5000, 4, "r2_test", "rf", 0.888},
    {"A2", "continuous", 10, 0.1, 5000, 4, "r2_test", "losaw-rf", 0.886},
    {"A2", "continuous", 10, 1.0, 500, 4, "r2_test", "rf", 0.458},
    {"A2", "continuous", 10, 1.0, 500, 4, "r2_test", "losaw-rf", 0.451},
    {"A2", "continuous", 10, 1.0, 5000, 4, "r2_test", "rf", 0.484},
    {"A2", "continuous", 10, 1.0, 5000, 4, "r2_test", "losaw-rf", 0.481},
    {"A2", "continuous", 10, 0.1, 500, 4, "r2_ind", "rf", 0.440},
    {"A2", "continuous", 10, 0.1, 500, 4, "r2_ind", "losaw-rf", 0.542},
    {"A2", "continuous", 10, 0.1, 5000, 4, "r2_ind", "rf", 0.539},
    {"A2", "continuous", 10, 0.1, 5000, 4, "r2_ind", "losaw-rf", 0.686},
    {"A2", "continuous", 10, 1.0, 500, 4, "r2_ind", "rf", 0.432},
    {"A2", "continuous", 10, 1.0, 500, 4, "r2_ind", "losaw-rf", 0.494},
    {"A2", "continuous", 10, 1.0, 5000, 4, "r2_ind", "rf", 0.545},
    {"A2", "continuous", 10, 1.0, 5000, 4, "r2_ind", "losaw-rf", 0.652},
    {"A2", "continuous", 10, 0.1, 500, 4, "pr_auc", "rf", 0.513},
    {"A2", "continuous", 10, 0.1, 500, 4, "pr_auc", "losaw-rf", 0.661},
    {"A2", "continuous", 10, 0.1, 5000, 4, "pr_auc", "rf", 0.514},
    {"A2", "continuous", 10, 0.1, 5000, 4, "pr_auc", "losaw-rf", 0.766},
    {"A2", "continuous", 10, 1.0, 500, 4, "pr_auc", "rf", 0.517},
    {"A2", "continuous", 10, 1.0, 500, 4, "pr_auc", "losaw-rf", 0.718},
    {"A2", "continuous", 10, 1.0, 5000, 4, "pr_auc", "rf", 0.514},
    {"A2", "continuous", 10, 1.0, 5000, 4, "pr_auc", "losaw-rf", 0.810},
    {"A2", "continuous", 10, 0.1, 500, 5, "r2_test", "rf", 0.842},
    {"A2", "continuous", 10, 0.1, 500, 5, "r2_test", "losaw-rf", 0.854},
    {"A2", "continuous", 10, 0.1, 5000, 5, "r2_test", "rf", 0.902},
    {"A2", "continuous", 10, 0.1, 5000, 5, "r2_test", "losaw-rf", 0.904},
    {"A2", "continuous", 10, 1.0, 500, 5, "r2_test", "rf", 0.437},
    {"A2", "continuous", 10, 1.0, 500, 5, "r2_test", "losaw-rf", 0.441},
    {"A2", "continuous", 10, 1.0, 5000, 5, "r2_test", "rf", 0.488},
    {"A2", "continuous", 10, 1.0, 5000, 5, "r2_test", "losaw-rf", 0.492},
    {"A2", "continuous", 10, 0.1, 500, 5, "r2_ind", "rf", 0.768},
    {"A2", "continuous", 10, 0.1, 500, 5, "r2_ind", "losaw-rf", 0.811},
    {"A2", "continuous", 10, 0.1, 5000, 5, "r2_ind", "rf", 0.956},
    {"A2", "continuous", 10, 0.1, 5000, 5, "r2_ind", "losaw-rf", 0.951},
    {"A2", "continuous", 10, 1.0, 500, 5, "r2_ind", "rf", 0.692},
    {"A2", "continuous", 10, 1.0, 500, 5, "r2_ind", "losaw-rf", 0.719},
    {"A2", "continuous", 10, 1.0, 5000, 5, "r2_ind", "rf", 0.930},
    {"A2", "continuous", 10, 1.0, 5000, 5, "r2_ind", "losaw-rf", 0.921},
    {"A2", "continuous", 10, 0.1, 500, 5, "pr_auc", "rf", 0.728},
    {"A2", "continuous", 10, 0.1, 500, 5, "pr_auc", "losaw-rf", 0.980},
    {"A2", "continuous", 10, 0.1, 5000, 5, "pr_auc", "rf", 0.947},
    {"A2", "continuous", 10, 0.1, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 1.0, 500, 5, "pr_auc", "rf", 0.694},
    {"A2", "continuous", 10, 1.0, 500, 5, "pr_auc", "losaw-rf", 0.943},
    {"A2", "continuous", 10, 1.0, 5000, 5, "pr_auc", "rf", 0.946},
    {"A2", "continuous", 10, 1.0, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 0.1, 500, 6, "r2_test", "rf", 0.850},
    {"A2", "continuous", 10, 0.1, 500, 6, "r2_test", "losaw-rf", 0.856},
    {"A2", "continuous", 10, 0.1, 5000, 6, "r2_test", "rf", 0.900},
    {"A2", "continuous", 10, 0.1, 5000, 6, "r2_test", "losaw-rf", 0.902},
    {"A2", "continuous", 10, 1.0, 500, 6, "r2_test", "rf", 0.439},
    {"A2", "continuous", 10, 1.0, 500, 6, "r2_test", "losaw-rf", 0.440},
    {"A2", "continuous", 10, 1.0, 5000, 6, "r2_test", "rf", 0.487},
    {"A2", "continuous", 10, 1.0, 5000, 6, "r2_test", "losaw-rf", 0.491},
    {"A2", "continuous", 10, 0.1, 500, 6, "r2_ind", "rf", 0.811},
    {"A2", "continuous", 10, 0.1, 500, 6, "r2_ind", "losaw-rf", 0.823},
    {"A2", "continuous", 10, 0.1, 5000, 6, "r2_ind", "rf", 0.964},
    {"A2", "continuous", 10, 0.1, 5000, 6, "r2_ind", "losaw-rf", 0.952},
    {"A2", "continuous", 10, 1.0, 500, 6, "r2_ind", "rf", 0.751},
    {"A2", "continuous", 10, 1.0, 500, 6, "r2_ind", "losaw-rf", 0.750},
    {"A2", "continuous", 10, 1.0, 5000, 6, "r2_ind", "rf", 0.943},
    {"A2", "continuous", 10, 1.0, 5000, 6, "r2_ind", "losaw-rf", 0.923},
    {"A2", "continuous", 10, 0.1, 500, 6, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 0.1, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 0.1, 5000, 6, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 0.1, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 1.0, 500, 6, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 1.0, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 1.0, 5000, 6, "pr_auc", "rf", 1.000},
    {"A2", "continuous", 10, 1.0, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 0.1, 500, 7, "r2_test", "rf", 0.842},
    {"A2", "continuous", 10, 0.1, 500, 7, "r2_test", "losaw-rf", 0.854},
    {"A2", "continuous", 10, 0.1, 5000, 7, "r2_test", "rf", 0.901},
    {"A2", "continuous", 10, 0.1, 5000, 7, "r2_test", "losaw-rf", 0.904},
    {"A2", "continuous", 10, 1.0, 500, 7, "r2_test", "rf", 0.427},
    {"A2", "continuous", 10, 1.0, 500, 7, "r2_test", "losaw-rf", 0.430},
    {"A2", "continuous", 10, 1.0, 5000, 7, "r2_test", "rf", 0.483},
    {"A2", "continuous", 10, 1.0, 5000, 7, "r2_test", "losaw-rf", 0.487},
    {"A2", "continuous", 10, 0.1, 500, 7, "r2_ind", "rf", 0.753},
    {"A2", "continuous", 10, 0.1, 500, 7, "r2_ind", "losaw-rf", 0.803},
    {"A2", "continuous", 10, 0.1, 5000, 7, "r2_ind", "rf", 0.941},
    {"A2", "continuous", 10, 0.1, 5000, 7, "r2_ind", "losaw-rf", 0.951},
    {"A2", "continuous", 10, 1.0, 500, 7, "r2_ind", "rf", 0.672},
    {"A2", "continuous", 10, 1.0, 500, 7, "r2_ind", "losaw-rf", 0.693},
    {"A2", "continuous", 10, 1.0, 5000, 7, "r2_ind", "rf", 0.900},
    {"A2", "continuous", 10, 1.0, 5000, 7, "r2_ind", "losaw-rf", 0.898},
    {"A2", "continuous", 10, 0.1, 500, 7, "pr_auc", "rf", 0.753},
    {"A2", "continuous", 10, 0.1, 500, 7, "pr_auc", "losaw-rf", 0.970},
    {"A2", "continuous", 10, 0.1, 5000, 7, "pr_auc", "rf", 0.927},
    {"A2", "continuous", 10, 0.1, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"A2", "continuous", 10, 1.0, 500, 7, "pr_auc", "rf", 0.744},
    {"A2", "continuous", 10, 1.0, 500, 7, "pr_auc", "losaw-rf", 0.875},
    {"A2", "continuous", 10, 1.0, 5000, 7, "pr_auc", "rf", 0.896},
    {"A2", "continuous", 10, 1.0, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 0.1, 500, 1, "r2_test", "rf", 0.882},
    {"A3", "discrete", 50, 0.1, 500, 1, "r2_test", "losaw-rf", 0.885},
    {"A3", "discrete", 50, 0.1, 5000, 1, "r2_test", "rf", 0.903},
    {"A3", "discrete", 50, 0.1, 5000, 1, "r2_test", "losaw-rf", 0.904},
    {"A3", "discrete", 50, 1.0, 500, 1, "r2_test", "rf", 0.467},
    {"A3", "discrete", 50, 1.0, 500, 1, "r2_test", "losaw-rf", 0.464},
    {"A3", "discrete", 50, 1.0, 5000, 1, "r2_test", "rf", 0.488},
    {"A3", "discrete", 50, 1.0, 5000, 1, "r2_test", "losaw-rf", 0.488},
    {"A3", "discrete", 50, 0.1, 500, 1, "r2_ind", "rf", 0.658},
    {"A3", "discrete", 50, 0.1, 500, 1, "r2_ind", "losaw-rf", 0.696},
    {"A3", "discrete", 50, 0.1, 5000, 1, "r2_ind", "rf", 0.943},
    {"A3", "discrete", 50, 0.1, 5000, 1, "r2_ind", "losaw-rf", 0.951},
    {"A3", "discrete", 50, 1.0, 500, 1, "r2_ind", "rf", 0.687},
    {"A3", "discrete", 50, 1.0, 500, 1, "r2_ind", "losaw-rf", 0.697},
    {"A3", "discrete", 50, 1.0, 5000, 1, "r2_ind", "rf", 0.933},
    {"A3", "discrete", 50, 1.0, 5000, 1, "r2_ind", "losaw-rf", 0.927},
    {"A3", "discrete", 50, 0.1, 500, 1, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 0.1, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 0.1, 5000, 1, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 0.1, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 1.0, 500, 1, "pr_auc", "rf", 0.997},
    {"A3", "discrete", 50, 1.0, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 1.0, 5000, 1, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 1.0, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 0.1, 500, 2, "r2_test", "rf", 0.867},
    {"A3", "discrete", 50, 0.1, 500, 2, "r2_test", "losaw-rf", 0.867},
    {"A3", "discrete", 50, 0.1, 5000, 2, "r2_test", "rf", 0.904},
    {"A3", "discrete", 50, 0.1, 5000, 2, "r2_test", "losaw-rf", 0.906},
    {"A3", "discrete", 50, 1.0, 500, 2, "r2_test", "rf", 0.463},
    {"A3", "discrete", 50, 1.0, 500, 2, "r2_test", "losaw-rf", 0.452},
    {"A3", "discrete", 50, 1.0, 5000, 2, "r2_test", "rf", 0.481},
    {"A3", "discrete", 50, 1.0, 5000, 2, "r2_test", "losaw-rf", 0.480},
    {"A3", "discrete", 50, 0.1, 500, 2, "r2_ind", "rf", 0.710},
    {"A3", "discrete", 50, 0.1, 500, 2, "r2_ind", "losaw-rf", 0.737},
    {"A3", "discrete", 50, 0.1, 5000, 2, "r2_ind", "rf", 0.905},
    {"A3", "discrete", 50, 0.1, 5000, 2, "r2_ind", "losaw-rf", 0.923},
    {"A3", "discrete", 50, 1.0, 500, 2, "r2_ind", "rf", 0.661},
    {"A3", "discrete", 50, 1.0, 500, 2, "r2_ind", "losaw-rf", 0.624},
    {"A3", "discrete", 50, 1.0, 5000, 2, "r2_ind", "rf", 0.881},
    {"A3", "discrete", 50, 1.0, 5000, 2, "r2_ind", "losaw-rf", 0.876},
    {"A3", "discrete", 50, 0.1, 500, 2, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 0.1, 500, 2, "pr_auc", "losaw-rf", 0.999},
    {"A3", "discrete", 50, 0.1, 5000, 2, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 0.1, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 1.0, 500, 2, "pr_auc", "rf", 0.993},
    {"A3", "discrete", 50, 1.0, 500, 2, "pr_auc", "losaw-rf", 0.988},
    {"A3", "discrete", 50, 1.0, 5000, 2, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 1.0, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 0.1, 500, 3, "r2_test", "rf", 0.876},
    {"A3", "discrete", 50, 0.1, 500, 3, "r2_test", "losaw-rf", 0.882},
    {"A3", "discrete", 50, 0.1, 5000, 3, "r2_test", "rf", 0.895},
    {"A3", "discrete", 50, 0.1, 5000, 3, "r2_test", "losaw-rf", 0.900},
    {"A3", "discrete", 50, 1.0, 500, 3, "r2_test", "rf", 0.494},
    {"A3", "discrete", 50, 1.0, 500, 3, "r2_test", "losaw-rf", 0.491},
    {"A3", "discrete", 50, 1.0, 5000, 3, "r2_test", "rf", 0.488},
    {"A3", "discrete", 50, 1.0, 5000, 3, "r2_test", "losaw-rf", 0.489},
    {"A3", "discrete", 50, 0.1, 500, 3, "r2_ind", "rf", 0.367},
    {"A3", "discrete", 50, 0.1, 500, 3, "r2_ind", "losaw-rf", 0.552},
    {"A3", "discrete", 50, 0.1, 5000, 3, "r2_ind", "rf", 0.648},
    {"A3", "discrete", 50, 0.1, 5000, 3, "r2_ind", "losaw-rf", 0.820},
    {"A3", "discrete", 50, 1.0, 500, 3, "r2_ind", "rf", 0.460},
    {"A3", "discrete", 50, 1.0, 500, 3, "r2_ind", "losaw-rf", 0.628},
    {"A3", "discrete", 50, 1.0, 5000, 3, "r2_ind", "rf", 0.555},
    {"A3", "discrete", 50, 1.0, 5000, 3, "r2_ind", "losaw-rf", 0.748},
    {"A3", "discrete", 50, 0.1, 500, 3, "pr_auc", "rf", 0.417},
    {"A3", "discrete", 50, 0.1, 500, 3, "pr_auc", "losaw-rf", 0.875},
    {"A3", "discrete", 50, 0.1, 5000, 3, "pr_auc", "rf", 0.417},
    {"A3", "discrete", 50, 0.1, 5000, 3, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 1.0, 500, 3, "pr_auc", "rf", 0.545},
    {"A3", "discrete", 50, 1.0, 500, 3, "pr_auc", "losaw-rf", 0.982},
    {"A3", "discrete", 50, 1.0, 5000, 3, "pr_auc", "rf", 0.417},
    {"A3", "discrete", 50, 1.0, 5000, 3, "pr_auc", "losaw-rf", 0.994},
    {"A3", "discrete", 50, 0.1, 500, 4, "r2_test", "rf", 0.864},
    {"A3", "discrete", 50, 0.1, 500, 4, "r2_test", "losaw-rf", 0.866},
    {"A3", "discrete", 50, 0.1, 5000, 4, "r2_test", "rf", 0.898},
    {"A3", "discrete", 50, 0.1, 5000, 4, "r2_test", "losaw-rf", 0.901},
    {"A3", "discrete", 50, 1.0, 500, 4, "r2_test", "rf", 0.451},
    {"A3", "discrete", 50, 1.0, 500, 4, "r2_test", "losaw-rf", 0.449},
    {"A3", "discrete", 50, 1.0, 5000, 4, "r2_test", "rf", 0.498},
    {"A3", "discrete", 50, 1.0, 5000, 4, "r2_test", "losaw-rf", 0.499},
    {"A3", "discrete", 50, 0.1, 500, 4, "r2_ind", "rf", 0.419},
    {"A3", "discrete", 50, 0.1, 500, 4, "r2_ind", "losaw-rf", 0.475},
    {"A3", "discrete", 50, 0.1, 5000, 4, "r2_ind", "rf", 0.636},
    {"A3", "discrete", 50, 0.1, 5000, 4, "r2_ind", "losaw-rf", 0.826},
    {"A3", "discrete", 50, 1.0, 500, 4, "r2_ind", "rf", 0.455},
    {"A3", "discrete", 50, 1.0, 500, 4, "r2_ind", "losaw-rf", 0.548},
    {"A3", "discrete", 50, 1.0, 5000, 4, "r2_ind", "rf", 0.604},
    {"A3", "discrete", 50, 1.0, 5000, 4, "r2_ind", "losaw-rf", 0.734},
    {"A3", "discrete", 50, 0.1, 500, 4, "pr_auc", "rf", 0.515},
    {"A3", "discrete", 50, 0.1, 500, 4, "pr_auc", "losaw-rf", 0.524},
    {"A3", "discrete", 50, 0.1, 5000, 4, "pr_auc", "rf", 0.514},
    {"A3", "discrete", 50, 0.1, 5000, 4, "pr_auc", "losaw-rf", 0.993},
    {"A3", "discrete", 50, 1.0, 500, 4, "pr_auc", "rf", 0.602},
    {"A3", "discrete", 50, 1.0, 500, 4, "pr_auc", "losaw-rf", 0.898},
    {"A3", "discrete", 50, 1.0, 5000, 4, "pr_auc", "rf", 0.514},
    {"A3", "discrete", 50, 1.0, 5000, 4, "pr_auc", "losaw-rf", 0.913},
    {"A3", "discrete", 50, 0.1, 500, 5, "r2_test", "rf", 0.891},
    {"A3", "discrete", 50, 0.1, 500, 5, "r2_test", "losaw-rf", 0.891},
    {"A3", "discrete", 50, 0.1, 5000, 5, "r2_test", "rf", 0.906},
    {"A3", "discrete", 50, 0.1, 5000, 5, "r2_test", "losaw-rf", 0.907},
    {"A3", "discrete", 50, 1.0, 500, 5, "r2_test", "rf", 0.467},
    {"A3", "discrete", 50, 1.0, 500, 5, "r2_test", "losaw-rf", 0.459},
    {"A3", "discrete", 50, 1.0, 5000, 5, "r2_test", "rf", 0.498},
    {"A3", "discrete", 50, 1.0, 5000, 5, "r2_test", "losaw-rf", 0.498},
    {"A3", "discrete", 50, 0.1, 500, 5, "r2_ind", "rf", 0.773},
    {"A3", "discrete", 50, 0.1, 500, 5, "r2_ind", "losaw-rf", 0.814},
    {"A3", "discrete", 50, 0.1, 5000, 5, "r2_ind", "rf", 0.866},
    {"A3", "discrete", 50, 0.1, 5000, 5, "r2_ind", "losaw-rf", 0.931},
    {"A3", "discrete", 50, 1.0, 500, 5, "r2_ind", "rf", 0.732},
    {"A3", "discrete", 50, 1.0, 500, 5, "r2_ind", "losaw-rf", 0.787},
    {"A3", "discrete", 50, 1.0, 5000, 5, "r2_ind", "rf", 0.871},
    {"A3", "discrete", 50, 1.0, 5000, 5, "r2_ind", "losaw-rf", 0.932},
    {"A3", "discrete", 50, 0.1, 500, 5, "pr_auc", "rf", 0.999},
    {"A3", "discrete", 50, 0.1, 500, 5, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 0.1, 5000, 5, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 0.1, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 1.0, 500, 5, "pr_auc", "rf", 0.855},
    {"A3", "discrete", 50, 1.0, 500, 5, "pr_auc", "losaw-rf", 0.970},
    {"A3", "discrete", 50, 1.0, 5000, 5, "pr_auc", "rf", 0.963},
    {"A3", "discrete", 50, 1.0, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 0.1, 500, 6, "r2_test", "rf", 0.882},
    {"A3", "discrete", 50, 0.1, 500, 6, "r2_test", "losaw-rf", 0.886},
    {"A3", "discrete", 50, 0.1, 5000, 6, "r2_test", "rf", 0.905},
    {"A3", "discrete", 50, 0.1, 5000, 6, "r2_test", "losaw-rf", 0.906},
    {"A3", "discrete", 50, 1.0, 500, 6, "r2_test", "rf", 0.469},
    {"A3", "discrete", 50, 1.0, 500, 6, "r2_test", "losaw-rf", 0.465},
    {"A3", "discrete", 50, 1.0, 5000, 6, "r2_test", "rf", 0.497},
    {"A3", "discrete", 50, 1.0, 5000, 6, "r2_test", "losaw-rf", 0.496},
    {"A3", "discrete", 50, 0.1, 500, 6, "r2_ind", "rf", 0.778},
    {"A3", "discrete", 50, 0.1, 500, 6, "r2_ind", "losaw-rf", 0.828},
    {"A3", "discrete", 50, 0.1, 5000, 6, "r2_ind", "rf", 0.947},
    {"A3", "discrete", 50, 0.1, 5000, 6, "r2_ind", "losaw-rf", 0.965},
    {"A3", "discrete", 50, 1.0, 500, 6, "r2_ind", "rf", 0.750},
    {"A3", "discrete", 50, 1.0, 500, 6, "r2_ind", "losaw-rf", 0.771},
    {"A3", "discrete", 50, 1.0, 5000, 6, "r2_ind", "rf", 0.945},
    {"A3", "discrete", 50, 1.0, 5000, 6, "r2_ind", "losaw-rf", 0.948},
    {"A3", "discrete", 50, 0.1, 500, 6, "pr_auc", "rf", 0.998},
    {"A3", "discrete", 50, 0.1, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 0.1, 5000, 6, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 0.1, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 1.0, 500, 6, "pr_auc", "rf", 0.995},
    {"A3", "discrete", 50, 1.0, 500, 6, "pr_auc", "losaw-rf", 0.994},
    {"A3", "discrete", 50, 1.0, 5000, 6, "pr_auc", "rf", 1.000},
    {"A3", "discrete", 50, 1.0, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 0.1, 500, 7, "r2_test", "rf", 0.879},
    {"A3", "discrete", 50, 0.1, 500, 7, "r2_test", "losaw-rf", 0.878},
    {"A3", "discrete", 50, 0.1, 5000, 7, "r2_test", "rf", 0.903},
    {"A3", "discrete", 50, 0.1, 5000, 7, "r2_test", "losaw-rf", 0.904},
    {"A3", "discrete", 50, 1.0, 500, 7, "r2_test", "rf", 0.466},
    {"A3", "discrete", 50, 1.0, 500, 7, "r2_test", "losaw-rf", 0.457},
    {"A3", "discrete", 50, 1.0, 5000, 7, "r2_test", "rf", 0.478},
    {"A3", "discrete", 50, 1.0, 5000, 7, "r2_test", "losaw-rf", 0.477},
    {"A3", "discrete", 50, 0.1, 500, 7, "r2_ind", "rf", 0.668},
    {"A3", "discrete", 50, 0.1, 500, 7, "r2_ind", "losaw-rf", 0.707},
    {"A3", "discrete", 50, 0.1, 5000, 7, "r2_ind", "rf", 0.881},
    {"A3", "discrete", 50, 0.1, 5000, 7, "r2_ind", "losaw-rf", 0.940},
    {"A3", "discrete", 50, 1.0, 500, 7, "r2_ind", "rf", 0.632},
    {"A3", "discrete", 50, 1.0, 500, 7, "r2_ind", "losaw-rf", 0.617},
    {"A3", "discrete", 50, 1.0, 5000, 7, "r2_ind", "rf", 0.827},
    {"A3", "discrete", 50, 1.0, 5000, 7, "r2_ind", "losaw-rf", 0.869},
    {"A3", "discrete", 50, 0.1, 500, 7, "pr_auc", "rf", 0.737},
    {"A3", "discrete", 50, 0.1, 500, 7, "pr_auc", "losaw-rf", 0.790},
    {"A3", "discrete", 50, 0.1, 5000, 7, "pr_auc", "rf", 0.825},
    {"A3", "discrete", 50, 0.1, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"A3", "discrete", 50, 1.0, 500, 7, "pr_auc", "rf", 0.746},
    {"A3", "discrete", 50, 1.0, 500, 7, "pr_auc", "losaw-rf", 0.818},
    {"A3", "discrete", 50, 1.0, 5000, 7, "pr_auc", "rf", 0.791},
    {"A3", "discrete", 50, 1.0, 5000, 7, "pr_auc", "losaw-rf", 0.954},
    {"A4", "continuous", 50, 0.1, 500, 1, "r2_test", "rf", 0.871},
    {"A4", "continuous", 50, 0.1, 500, 1, "r2_test", "losaw-rf", 0.869},
    {"A4", "continuous", 50, 0.1, 5000, 1, "r2_test", "rf", 0.898},
    {"A4", "continuous", 50, 0.1, 5000, 1, "r2_test", "losaw-rf", 0.898},
    {"A4", "continuous", 50, 1.0, 500, 1, "r2_test", "rf", 0.451},
    {"A4", "continuous", 50, 1.0, 500, 1, "r2_test", "losaw-rf", 0.444},
    {"A4", "continuous", 50, 1.0, 5000, 1, "r2_test", "rf", 0.487},
    {"A4", "continuous", 50, 1.0, 5000, 1, "r2_test", "losaw-rf", 0.487},
    {"A4", "continuous", 50, 0.1, 500, 1, "r2_ind", "rf", 0.680},
    {"A4", "continuous", 50, 0.1, 500, 1, "r2_ind", "losaw-rf", 0.716},
    {"A4", "continuous", 50, 0.1, 5000, 1, "r2_ind", "rf", 0.798},
    {"A4", "continuous", 50, 0.1, 5000, 1, "r2_ind", "losaw-rf", 0.812},
    {"A4", "continuous", 50, 1.0, 500, 1, "r2_ind", "rf", 0.595},
    {"A4", "continuous", 50, 1.0, 500, 1, "r2_ind", "losaw-rf", 0.636},
    {"A4", "continuous", 50, 1.0, 5000, 1, "r2_ind", "rf", 0.766},
    {"A4", "continuous", 50, 1.0, 5000, 1, "r2_ind", "losaw-rf", 0.797},
    {"A4", "continuous", 50, 0.1, 500, 1, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 0.1, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 0.1, 5000, 1, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 0.1, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 1.0, 500, 1, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 1.0, 500, 1, "pr_auc", "losaw-rf", 0.997},
    {"A4", "continuous", 50, 1.0, 5000, 1, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 1.0, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 0.1, 500, 2, "r2_test", "rf", 0.834},
    {"A4", "continuous", 50, 0.1, 500, 2, "r2_test", "losaw-rf", 0.829},
    {"A4", "continuous", 50, 0.1, 5000, 2, "r2_test", "rf", 0.887},
    {"A4", "continuous", 50, 0.1, 5000, 2, "r2_test", "losaw-rf", 0.885},
    {"A4", "continuous", 50, 1.0, 500, 2, "r2_test", "rf", 0.434},
    {"A4", "continuous", 50, 1.0, 500, 2, "r2_test", "losaw-rf", 0.424},
    {"A4", "continuous", 50, 1.0, 5000, 2, "r2_test", "rf", 0.480},
    {"A4", "continuous", 50, 1.0, 5000, 2, "r2_test", "losaw-rf", 0.476},
    {"A4", "continuous", 50, 0.1, 500, 2, "r2_ind", "rf", 0.676},
    {"A4", "continuous", 50, 0.1, 500, 2, "r2_ind", "losaw-rf", 0.705},
    {"A4", "continuous", 50, 0.1, 5000, 2, "r2_ind", "rf", 0.817},
    {"A4", "continuous", 50, 0.1, 5000, 2, "r2_ind", "losaw-rf", 0.842},
    {"A4", "continuous", 50, 1.0, 500, 2, "r2_ind", "rf", 0.588},
    {"A4", "continuous", 50, 1.0, 500, 2, "r2_ind", "losaw-rf", 0.598},
    {"A4", "continuous", 50, 1.0, 5000, 2, "r2_ind", "rf", 0.778},
    {"A4", "continuous", 50, 1.0, 5000, 2, "r2_ind", "losaw-rf", 0.795},
    {"A4", "continuous", 50, 0.1, 500, 2, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 0.1, 500, 2, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 0.1, 5000, 2, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 0.1, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 1.0, 500, 2, "pr_auc", "rf", 0.987},
    {"A4", "continuous", 50, 1.0, 500, 2, "pr_auc", "losaw-rf", 0.960},
    {"A4", "continuous", 50, 1.0, 5000, 2, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 1.0, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 0.1, 500, 3, "r2_test", "rf", 0.854},
    {"A4", "continuous", 50, 0.1, 500, 3, "r2_test", "losaw-rf", 0.851},
    {"A4", "continuous", 50, 0.1, 5000, 3, "r2_test", "rf", 0.888},
    {"A4", "continuous", 50, 0.1, 5000, 3, "r2_test", "losaw-rf", 0.890},
    {"A4", "continuous", 50, 1.0, 500, 3, "r2_test", "rf", 0.450},
    {"A4", "continuous", 50, 1.0, 500, 3, "r2_test", "losaw-rf", 0.439},
    {"A4", "continuous", 50, 1.0, 5000, 3, "r2_test", "rf", 0.483},
    {"A4", "continuous", 50, 1.0, 5000, 3, "r2_test", "losaw-rf", 0.482},
    {"A4", "continuous", 50, 0.1, 500, 3, "r2_ind", "rf", 0.343},
    {"A4", "continuous", 50, 0.1, 500, 3, "r2_ind", "losaw-rf", 0.530},
    {"A4", "continuous", 50, 0.1, 5000, 3, "r2_ind", "rf", 0.462},
    {"A4", "continuous", 50, 0.1, 5000, 3, "r2_ind", "losaw-rf", 0.661},
    {"A4", "continuous", 50, 1.0, 500, 3, "r2_ind", "rf", 0.334},
    {"A4", "continuous", 50, 1.0, 500, 3, "r2_ind", "losaw-rf", 0.484},
    {"A4", "continuous", 50, 1.0, 5000, 3, "r2_ind", "rf", 0.424},
    {"A4", "continuous", 50, 1.0, 5000, 3, "r2_ind", "losaw-rf", 0.646},
    {"A4", "continuous", 50, 0.1, 500, 3, "pr_auc", "rf", 0.417},
    {"A4", "continuous", 50, 0.1, 500, 3, "pr_auc", "losaw-rf", 0.562},
    {"A4", "continuous", 50, 0.1, 5000, 3, "pr_auc", "rf", 0.417},
    {"A4", "continuous", 50, 0.1, 5000, 3, "pr_auc", "losaw-rf", 0.637},
    {"A4", "continuous", 50, 1.0, 500, 3, "pr_auc", "rf", 0.424},
    {"A4", "continuous", 50, 1.0, 500, 3, "pr_auc", "losaw-rf", 0.687},
    {"A4", "continuous", 50, 1.0, 5000, 3, "pr_auc", "rf", 0.417},
    {"A4", "continuous", 50, 1.0, 5000, 3, "pr_auc", "losaw-rf", 0.800},
    {"A4", "continuous", 50, 0.1, 500, 4, "r2_test", "rf", 0.836},
    {"A4", "continuous", 50, 0.1, 500, 4, "r2_test", "losaw-rf", 0.826},
    {"A4", "continuous", 50, 0.1, 5000, 4, "r2_test", "rf", 0.882},
    {"A4", "continuous", 50, 0.1, 5000, 4, "r2_test", "losaw-rf", 0.880},
    {"A4", "continuous", 50, 1.0, 500, 4, "r2_test", "rf", 0.438},
    {"A4", "continuous", 50, 1.0, 500, 4, "r2_test", "losaw-rf", 0.428},
    {"A4", "continuous", 50, 1.0, 5000, 4, "r2_test", "rf", 0.472},
    {"A4", "continuous", 50, 1.0, 5000, 4, "r2_test", "losaw-rf", 0.467},
    {"A4", "continuous", 50, 0.1, 500, 4, "r2_ind", "rf", 0.385},
    {"A4", "continuous", 50, 0.1, 500, 4, "r2_ind", "losaw-rf", 0.519},
    {"A4", "continuous", 50, 0.1, 5000, 4, "r2_ind", "rf", 0.478},
    {"A4", "continuous", 50, 0.1, 5000, 4, "r2_ind", "losaw-rf", 0.685},
    {"A4", "continuous", 50, 1.0, 500, 4, "r2_ind", "rf", 0.371},
    {"A4", "continuous", 50, 1.0, 500, 4, "r2_ind", "losaw-rf", 0.470},
    {"A4", "continuous", 50, 1.0, 5000, 4, "r2_ind", "rf", 0.452},
    {"A4", "continuous", 50, 1.0, 5000, 4, "r2_ind", "losaw-rf", 0.633},
    {"A4", "continuous", 50, 0.1, 500, 4, "pr_auc", "rf", 0.513},
    {"A4", "continuous", 50, 0.1, 500, 4, "pr_auc", "losaw-rf", 0.641},
    {"A4", "continuous", 50, 0.1, 5000, 4, "pr_auc", "rf", 0.514},
    {"A4", "continuous", 50, 0.1, 5000, 4, "pr_auc", "losaw-rf", 0.727},
    {"A4", "continuous", 50, 1.0, 500, 4, "pr_auc", "rf", 0.511},
    {"A4", "continuous", 50, 1.0, 500, 4, "pr_auc", "losaw-rf", 0.716},
    {"A4", "continuous", 50, 1.0, 5000, 4, "pr_auc", "rf", 0.514},
    {"A4", "continuous", 50, 1.0, 5000, 4, "pr_auc", "losaw-rf", 0.768},
    {"A4", "continuous", 50, 0.1, 500, 5, "r2_test", "rf", 0.832},
    {"A4", "continuous", 50, 0.1, 500, 5, "r2_test", "losaw-rf", 0.848},
    {"A4", "continuous", 50, 0.1, 5000, 5, "r2_test", "rf", 0.901},
    {"A4", "continuous", 50, 0.1, 5000, 5, "r2_test", "losaw-rf", 0.903},
    {"A4", "continuous", 50, 1.0, 500, 5, "r2_test", "rf", 0.431},
    {"A4", "continuous", 50, 1.0, 500, 5, "r2_test", "losaw-rf", 0.441},
    {"A4", "continuous", 50, 1.0, 5000, 5, "r2_test", "rf", 0.490},
    {"A4", "continuous", 50, 1.0, 5000, 5, "r2_test", "losaw-rf", 0.494},
    {"A4", "continuous", 50, 0.1, 500, 5, "r2_ind", "rf", 0.751},
    {"A4", "continuous", 50, 0.1, 500, 5, "r2_ind", "losaw-rf", 0.813},
    {"A4", "continuous", 50, 0.1, 5000, 5, "r2_ind", "rf", 0.968},
    {"A4", "continuous", 50, 0.1, 5000, 5, "r2_ind", "losaw-rf", 0.965},
    {"A4", "continuous", 50, 1.0, 500, 5, "r2_ind", "rf", 0.660},
    {"A4", "continuous", 50, 1.0, 500, 5, "r2_ind", "losaw-rf", 0.734},
    {"A4", "continuous", 50, 1.0, 5000, 5, "r2_ind", "rf", 0.938},
    {"A4", "continuous", 50, 1.0, 5000, 5, "r2_ind", "losaw-rf", 0.940},
    {"A4", "continuous", 50, 0.1, 500, 5, "pr_auc", "rf", 0.642},
    {"A4", "continuous", 50, 0.1, 500, 5, "pr_auc", "losaw-rf", 0.969},
    {"A4", "continuous", 50, 0.1, 5000, 5, "pr_auc", "rf", 0.888},
    {"A4", "continuous", 50, 0.1, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 1.0, 500, 5, "pr_auc", "rf", 0.657},
    {"A4", "continuous", 50, 1.0, 500, 5, "pr_auc", "losaw-rf", 0.941},
    {"A4", "continuous", 50, 1.0, 5000, 5, "pr_auc", "rf", 0.882},
    {"A4", "continuous", 50, 1.0, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 0.1, 500, 6, "r2_test", "rf", 0.848},
    {"A4", "continuous", 50, 0.1, 500, 6, "r2_test", "losaw-rf", 0.854},
    {"A4", "continuous", 50, 0.1, 5000, 6, "r2_test", "rf", 0.903},
    {"A4", "continuous", 50, 0.1, 5000, 6, "r2_test", "losaw-rf", 0.904},
    {"A4", "continuous", 50, 1.0, 500, 6, "r2_test", "rf", 0.438},
    {"A4", "continuous", 50, 1.0, 500, 6, "r2_test", "losaw-rf", 0.438},
    {"A4", "continuous", 50, 1.0, 5000, 6, "r2_test", "rf", 0.488},
    {"A4", "continuous", 50, 1.0, 5000, 6, "r2_test", "losaw-rf", 0.489},
    {"A4", "continuous", 50, 0.1, 500, 6, "r2_ind", "rf", 0.823},
    {"A4", "continuous", 50, 0.1, 500, 6, "r2_ind", "losaw-rf", 0.842},
    {"A4", "continuous", 50, 0.1, 5000, 6, "r2_ind", "rf", 0.975},
    {"A4", "continuous", 50, 0.1, 5000, 6, "r2_ind", "losaw-rf", 0.966},
    {"A4", "continuous", 50, 1.0, 500, 6, "r2_ind", "rf", 0.755},
    {"A4", "continuous", 50, 1.0, 500, 6, "r2_ind", "losaw-rf", 0.759},
    {"A4", "continuous", 50, 1.0, 5000, 6, "r2_ind", "rf", 0.957},
    {"A4", "continuous", 50, 1.0, 5000, 6, "r2_ind", "losaw-rf", 0.935},
    {"A4", "continuous", 50, 0.1, 500, 6, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 0.1, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 0.1, 5000, 6, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 0.1, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 1.0, 500, 6, "pr_auc", "rf", 0.999},
    {"A4", "continuous", 50, 1.0, 500, 6, "pr_auc", "losaw-rf", 0.993},
    {"A4", "continuous", 50, 1.0, 5000, 6, "pr_auc", "rf", 1.000},
    {"A4", "continuous", 50, 1.0, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 0.1, 500, 7, "r2_test", "rf", 0.833},
    {"A4", "continuous", 50, 0.1, 500, 7, "r2_test", "losaw-rf", 0.847},
    {"A4", "continuous", 50, 0.1, 5000, 7, "r2_test", "rf", 0.899},
    {"A4", "continuous", 50, 0.1, 5000, 7, "r2_test", "losaw-rf", 0.902},
    {"A4", "continuous", 50, 1.0, 500, 7, "r2_test", "rf", 0.424},
    {"A4", "continuous", 50, 1.0, 500, 7, "r2_test", "losaw-rf", 0.427},
    {"A4", "continuous", 50, 1.0, 5000, 7, "r2_test", "rf", 0.483},
    {"A4", "continuous", 50, 1.0, 5000, 7, "r2_test", "losaw-rf", 0.487},
    {"A4", "continuous", 50, 0.1, 500, 7, "r2_ind", "rf", 0.746},
    {"A4", "continuous", 50, 0.1, 500, 7, "r2_ind", "losaw-rf", 0.809},
    {"A4", "continuous", 50, 0.1, 5000, 7, "r2_ind", "rf", 0.947},
    {"A4", "continuous", 50, 0.1, 5000, 7, "r2_ind", "losaw-rf", 0.961},
    {"A4", "continuous", 50, 1.0, 500, 7, "r2_ind", "rf", 0.642},
    {"A4", "continuous", 50, 1.0, 500, 7, "r2_ind", "losaw-rf", 0.685},
    {"A4", "continuous", 50, 1.0, 5000, 7, "r2_ind", "rf", 0.902},
    {"A4", "continuous", 50, 1.0, 5000, 7, "r2_ind", "losaw-rf", 0.912},
    {"A4", "continuous", 50, 0.1, 500, 7, "pr_auc", "rf", 0.743},
    {"A4", "continuous", 50, 0.1, 500, 7, "pr_auc", "losaw-rf", 0.971},
    {"A4", "continuous", 50, 0.1, 5000, 7, "pr_auc", "rf", 0.920},
    {"A4", "continuous", 50, 0.1, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"A4", "continuous", 50, 1.0, 500, 7, "pr_auc", "rf", 0.742},
    {"A4", "continuous", 50, 1.0, 500, 7, "pr_auc", "losaw-rf", 0.877},
    {"A4", "continuous", 50, 1.0, 5000, 7, "pr_auc", "rf", 0.904},
    {"A4", "continuous", 50, 1.0, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 0.1, 500, 1, "r2_test", "rf", 0.880},
    {"A5", "discrete", 100, 0.1, 500, 1, "r2_test", "losaw-rf", 0.881},
    {"A5", "discrete", 100, 0.1, 5000, 1, "r2_test", "rf", 0.904},
    {"A5", "discrete", 100, 0.1, 5000, 1, "r2_test", "losaw-rf", 0.904},
    {"A5", "discrete", 100, 1.0, 500, 1, "r2_test", "rf", 0.481},
    {"A5", "discrete", 100, 1.0, 500, 1, "r2_test", "losaw-rf", 0.476},
    {"A5", "discrete", 100, 1.0, 5000, 1, "r2_test", "rf", 0.489},
    {"A5", "discrete", 100, 1.0, 5000, 1, "r2_test", "losaw-rf", 0.487},
    {"A5", "discrete", 100, 0.1, 500, 1, "r2_ind", "rf", 0.705},
    {"A5", "discrete", 100, 0.1, 500, 1, "r2_ind", "losaw-rf", 0.713},
    {"A5", "discrete", 100, 0.1, 5000, 1, "r2_ind", "rf", 0.945},
    {"A5", "discrete", 100, 0.1, 5000, 1, "r2_ind", "losaw-rf", 0.953},
    {"A5", "discrete", 100, 1.0, 500, 1, "r2_ind", "rf", 0.661},
    {"A5", "discrete", 100, 1.0, 500, 1, "r2_ind", "losaw-rf", 0.669},
    {"A5", "discrete", 100, 1.0, 5000, 1, "r2_ind", "rf", 0.939},
    {"A5", "discrete", 100, 1.0, 5000, 1, "r2_ind", "losaw-rf", 0.920},
    {"A5", "discrete", 100, 0.1, 500, 1, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 0.1, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 0.1, 5000, 1, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 0.1, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 1.0, 500, 1, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 1.0, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 1.0, 5000, 1, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 1.0, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 0.1, 500, 2, "r2_test", "rf", 0.874},
    {"A5", "discrete", 100, 0.1, 500, 2, "r2_test", "losaw-rf", 0.867},
    {"A5", "discrete", 100, 0.1, 5000, 2, "r2_test", "rf", 0.897},
    {"A5", "discrete", 100, 0.1, 5000, 2, "r2_test", "losaw-rf", 0.898},
    {"A5", "discrete", 100, 1.0, 500, 2, "r2_test", "rf", 0.474},
    {"A5", "discrete", 100, 1.0, 500, 2, "r2_test", "losaw-rf", 0.461},
    {"A5", "discrete", 100, 1.0, 5000, 2, "r2_test", "rf", 0.482},
    {"A5", "discrete", 100, 1.0, 5000, 2, "r2_test", "losaw-rf", 0.481},
    {"A5", "discrete", 100, 0.1, 500, 2, "r2_ind", "rf", 0.718},
    {"A5", "discrete", 100, 0.1, 500, 2, "r2_ind", "losaw-rf", 0.703},
    {"A5", "discrete", 100, 0.1, 5000, 2, "r2_ind", "rf", 0.907},
    {"A5", "discrete", 100, 0.1, 5000, 2, "r2_ind", "losaw-rf", 0.923},
    {"A5", "discrete", 100, 1.0, 500, 2, "r2_ind", "rf", 0.629},
    {"A5", "discrete", 100, 1.0, 500, 2, "r2_ind", "losaw-rf", 0.551},
    {"A5", "discrete", 100, 1.0, 5000, 2, "r2_ind", "rf", 0.870},
    {"A5", "discrete", 100, 1.0, 5000, 2, "r2_ind", "losaw-rf", 0.868},
    {"A5", "discrete", 100, 0.1, 500, 2, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 0.1, 500, 2, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 0.1, 5000, 2, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 0.1, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 1.0, 500, 2, "pr_auc", "rf", 0.992},
    {"A5", "discrete", 100, 1.0, 500, 2, "pr_auc", "losaw-rf", 0.976},
    {"A5", "discrete", 100, 1.0, 5000, 2, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 1.0, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 0.1, 500, 3, "r2_test", "rf", 0.885},
    {"A5", "discrete", 100, 0.1, 500, 3, "r2_test", "losaw-rf", 0.886},
    {"A5", "discrete", 100, 0.1, 5000, 3, "r2_test", "rf", 0.898},
    {"A5", "discrete", 100, 0.1, 5000, 3, "r2_test", "losaw-rf", 0.902},
    {"A5", "discrete", 100, 1.0, 500, 3, "r2_test", "rf", 0.450},
    {"A5", "discrete", 100, 1.0, 500, 3, "r2_test", "losaw-rf", 0.446},
    {"A5", "discrete", 100, 1.0, 5000, 3, "r2_test", "rf", 0.491},
    {"A5", "discrete", 100, 1.0, 5000, 3, "r2_test", "losaw-rf", 0.493},
    {"A5", "discrete", 100, 0.1, 500, 3, "r2_ind", "rf", 0.265},
    {"A5", "discrete", 100, 0.1, 500, 3, "r2_ind", "losaw-rf", 0.358},
    {"A5", "discrete", 100, 0.1, 5000, 3, "r2_ind", "rf", 0.600},
    {"A5", "discrete", 100, 0.1, 5000, 3, "r2_ind", "losaw-rf", 0.787},
    {"A5", "discrete", 100, 1.0, 500, 3, "r2_ind", "rf", 0.264},
    {"A5", "discrete", 100, 1.0, 500, 3, "r2_ind", "losaw-rf", 0.405},
    {"A5", "discrete", 100, 1.0, 5000, 3, "r2_ind", "rf", 0.446},
    {"A5", "discrete", 100, 1.0, 5000, 3, "r2_ind", "losaw-rf", 0.658},
    {"A5", "discrete", 100, 0.1, 500, 3, "pr_auc", "rf", 0.417},
    {"A5", "discrete", 100, 0.1, 500, 3, "pr_auc", "losaw-rf", 0.417},
    {"A5", "discrete", 100, 0.1, 5000, 3, "pr_auc", "rf", 0.417},
    {"A5", "discrete", 100, 0.1, 5000, 3, "pr_auc", "losaw-rf", 0.999},
    {"A5", "discrete", 100, 1.0, 500, 3, "pr_auc", "rf", 0.417},
    {"A5", "discrete", 100, 1.0, 500, 3, "pr_auc", "losaw-rf", 0.593},
    {"A5", "discrete", 100, 1.0, 5000, 3, "pr_auc", "rf", 0.417},
    {"A5", "discrete", 100, 1.0, 5000, 3, "pr_auc", "losaw-rf", 0.959},
    {"A5", "discrete", 100, 0.1, 500, 4, "r2_test", "rf", 0.864},
    {"A5", "discrete", 100, 0.1, 500, 4, "r2_test", "losaw-rf", 0.863},
    {"A5", "discrete", 100, 0.1, 5000, 4, "r2_test", "rf", 0.897},
    {"A5", "discrete", 100, 0.1, 5000, 4, "r2_test", "losaw-rf", 0.901},
    {"A5", "discrete", 100, 1.0, 500, 4, "r2_test", "rf", 0.483},
    {"A5", "discrete", 100, 1.0, 500, 4, "r2_test", "losaw-rf", 0.477},
    {"A5", "discrete", 100, 1.0, 5000, 4, "r2_test", "rf", 0.490},
    {"A5", "discrete", 100, 1.0, 5000, 4, "r2_test", "losaw-rf", 0.491},
    {"A5", "discrete", 100, 0.1, 500, 4, "r2_ind", "rf", 0.306},
    {"A5", "discrete", 100, 0.1, 500, 4, "r2_ind", "losaw-rf", 0.378},
    {"A5", "discrete", 100, 0.1, 5000, 4, "r2_ind", "rf", 0.592},
    {"A5", "discrete", 100, 0.1, 5000, 4, "r2_ind", "losaw-rf", 0.799},
    {"A5", "discrete", 100, 1.0, 500, 4, "r2_ind", "rf", 0.342},
    {"A5", "discrete", 100, 1.0, 500, 4, "r2_ind", "losaw-rf", 0.406},
    {"A5", "discrete", 100, 1.0, 5000, 4, "r2_ind", "rf", 0.576},
    {"A5", "discrete", 100, 1.0, 5000, 4, "r2_ind", "losaw-rf", 0.730},
    {"A5", "discrete", 100, 0.1, 500, 4, "pr_auc", "rf", 0.485},
    {"A5", "discrete", 100, 0.1, 500, 4, "pr_auc", "losaw-rf", 0.510},
    {"A5", "discrete", 100, 0.1, 5000, 4, "pr_auc", "rf", 0.514},
    {"A5", "discrete", 100, 0.1, 5000, 4, "pr_auc", "losaw-rf", 0.961},
    {"A5", "discrete", 100, 1.0, 500, 4, "pr_auc", "rf", 0.510},
    {"A5", "discrete", 100, 1.0, 500, 4, "pr_auc", "losaw-rf", 0.631},
    {"A5", "discrete", 100, 1.0, 5000, 4, "pr_auc", "rf", 0.514},
    {"A5", "discrete", 100, 1.0, 5000, 4, "pr_auc", "losaw-rf", 0.905},
    {"A5", "discrete", 100, 0.1, 500, 5, "r2_test", "rf", 0.868},
    {"A5", "discrete", 100, 0.1, 500, 5, "r2_test", "losaw-rf", 0.871},
    {"A5", "discrete", 100, 0.1, 5000, 5, "r2_test", "rf", 0.906},
    {"A5", "discrete", 100, 0.1, 5000, 5, "r2_test", "losaw-rf", 0.908},
    {"A5", "discrete", 100, 1.0, 500, 5, "r2_test", "rf", 0.470},
    {"A5", "discrete", 100, 1.0, 500, 5, "r2_test", "losaw-rf", 0.459},
    {"A5", "discrete", 100, 1.0, 5000, 5, "r2_test", "rf", 0.496},
    {"A5", "discrete", 100, 1.0, 5000, 5, "r2_test", "losaw-rf", 0.496},
    {"A5", "discrete", 100, 0.1, 500, 5, "r2_ind", "rf", 0.656},
    {"A5", "discrete", 100, 0.1, 500, 5, "r2_ind", "losaw-rf", 0.693},
    {"A5", "discrete", 100, 0.1, 5000, 5, "r2_ind", "rf", 0.899},
    {"A5", "discrete", 100, 0.1, 5000, 5, "r2_ind", "losaw-rf", 0.959},
    {"A5", "discrete", 100, 1.0, 500, 5, "r2_ind", "rf", 0.761},
    {"A5", "discrete", 100, 1.0, 500, 5, "r2_ind", "losaw-rf", 0.783},
    {"A5", "discrete", 100, 1.0, 5000, 5, "r2_ind", "rf", 0.864},
    {"A5", "discrete", 100, 1.0, 5000, 5, "r2_ind", "losaw-rf", 0.912},
    {"A5", "discrete", 100, 0.1, 500, 5, "pr_auc", "rf", 0.571},
    {"A5", "discrete", 100, 0.1, 500, 5, "pr_auc", "losaw-rf", 0.797},
    {"A5", "discrete", 100, 0.1, 5000, 5, "pr_auc", "rf", 0.702},
    {"A5", "discrete", 100, 0.1, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 1.0, 500, 5, "pr_auc", "rf", 0.938},
    {"A5", "discrete", 100, 1.0, 500, 5, "pr_auc", "losaw-rf", 0.964},
    {"A5", "discrete", 100, 1.0, 5000, 5, "pr_auc", "rf", 0.951},
    {"A5", "discrete", 100, 1.0, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 0.1, 500, 6, "r2_test", "rf", 0.873},
    {"A5", "discrete", 100, 0.1, 500, 6, "r2_test", "losaw-rf", 0.875},
    {"A5", "discrete", 100, 0.1, 5000, 6, "r2_test", "rf", 0.906},
    {"A5", "discrete", 100, 0.1, 5000, 6, "r2_test", "losaw-rf", 0.907},
    {"A5", "discrete", 100, 1.0, 500, 6, "r2_test", "rf", 0.473},
    {"A5", "discrete", 100, 1.0, 500, 6, "r2_test", "losaw-rf", 0.466},
    {"A5", "discrete", 100, 1.0, 5000, 6, "r2_test", "rf", 0.494},
    {"A5", "discrete", 100, 1.0, 5000, 6, "r2_test", "losaw-rf", 0.493},
    {"A5", "discrete", 100, 0.1, 500, 6, "r2_ind", "rf", 0.780},
    {"A5", "discrete", 100, 0.1, 500, 6, "r2_ind", "losaw-rf", 0.810},
    {"A5", "discrete", 100, 0.1, 5000, 6, "r2_ind", "rf", 0.961},
    {"A5", "discrete", 100, 0.1, 5000, 6, "r2_ind", "losaw-rf", 0.972},
    {"A5", "discrete", 100, 1.0, 500, 6, "r2_ind", "rf", 0.752},
    {"A5", "discrete", 100, 1.0, 500, 6, "r2_ind", "losaw-rf", 0.730},
    {"A5", "discrete", 100, 1.0, 5000, 6, "r2_ind", "rf", 0.952},
    {"A5", "discrete", 100, 1.0, 5000, 6, "r2_ind", "losaw-rf", 0.954},
    {"A5", "discrete", 100, 0.1, 500, 6, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 0.1, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 0.1, 5000, 6, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 0.1, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 1.0, 500, 6, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 1.0, 500, 6, "pr_auc", "losaw-rf", 0.998},
    {"A5", "discrete", 100, 1.0, 5000, 6, "pr_auc", "rf", 1.000},
    {"A5", "discrete", 100, 1.0, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 0.1, 500, 7, "r2_test", "rf", 0.879},
    {"A5", "discrete", 100, 0.1, 500, 7, "r2_test", "losaw-rf", 0.879},
    {"A5", "discrete", 100, 0.1, 5000, 7, "r2_test", "rf", 0.905},
    {"A5", "discrete", 100, 0.1, 5000, 7, "r2_test", "losaw-rf", 0.906},
    {"A5", "discrete", 100, 1.0, 500, 7, "r2_test", "rf", 0.455},
    {"A5", "discrete", 100, 1.0, 500, 7, "r2_test", "losaw-rf", 0.446},
    {"A5", "discrete", 100, 1.0, 5000, 7, "r2_test", "rf", 0.502},
    {"A5", "discrete", 100, 1.0, 5000, 7, "r2_test", "losaw-rf", 0.502},
    {"A5", "discrete", 100, 0.1, 500, 7, "r2_ind", "rf", 0.695},
    {"A5", "discrete", 100, 0.1, 500, 7, "r2_ind", "losaw-rf", 0.738},
    {"A5", "discrete", 100, 0.1, 5000, 7, "r2_ind", "rf", 0.871},
    {"A5", "discrete", 100, 0.1, 5000, 7, "r2_ind", "losaw-rf", 0.932},
    {"A5", "discrete", 100, 1.0, 500, 7, "r2_ind", "rf", 0.644},
    {"A5", "discrete", 100, 1.0, 500, 7, "r2_ind", "losaw-rf", 0.646},
    {"A5", "discrete", 100, 1.0, 5000, 7, "r2_ind", "rf", 0.849},
    {"A5", "discrete", 100, 1.0, 5000, 7, "r2_ind", "losaw-rf", 0.884},
    {"A5", "discrete", 100, 0.1, 500, 7, "pr_auc", "rf", 0.696},
    {"A5", "discrete", 100, 0.1, 500, 7, "pr_auc", "losaw-rf", 0.797},
    {"A5", "discrete", 100, 0.1, 5000, 7, "pr_auc", "rf", 0.840},
    {"A5", "discrete", 100, 0.1, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"A5", "discrete", 100, 1.0, 500, 7, "pr_auc", "rf", 0.868},
    {"A5", "discrete", 100, 1.0, 500, 7, "pr_auc", "losaw-rf", 0.947},
    {"A5", "discrete", 100, 1.0, 5000, 7, "pr_auc", "rf", 0.826},
    {"A5", "discrete", 100, 1.0, 5000, 7, "pr_auc", "losaw-rf", 0.982},
    {"A6", "continuous", 100, 0.1, 500, 1, "r2_test", "rf", 0.871},
    {"A6", "continuous", 100, 0.1, 500, 1, "r2_test", "losaw-rf", 0.869},
    {"A6", "continuous", 100, 0.1, 5000, 1, "r2_test", "rf", 0.901},
    {"A6", "continuous", 100, 0.1, 5000, 1, "r2_test", "losaw-rf", 0.901},
    {"A6", "continuous", 100, 1.0, 500, 1, "r2_test", "rf", 0.454},
    {"A6", "continuous", 100, 1.0, 500, 1, "r2_test", "losaw-rf", 0.446},
    {"A6", "continuous", 100, 1.0, 5000, 1, "r2_test", "rf", 0.487},
    {"A6", "continuous", 100, 1.0, 5000, 1, "r2_test", "losaw-rf", 0.487},
    {"A6", "continuous", 100, 0.1, 500, 1, "r2_ind", "rf", 0.686},
    {"A6", "continuous", 100, 0.1, 500, 1, "r2_ind", "losaw-rf", 0.723},
    {"A6", "continuous", 100, 0.1, 5000, 1, "r2_ind", "rf", 0.806},
    {"A6", "continuous", 100, 0.1, 5000, 1, "r2_ind", "losaw-rf", 0.822},
    {"A6", "continuous", 100, 1.0, 500, 1, "r2_ind", "rf", 0.591},
    {"A6", "continuous", 100, 1.0, 500, 1, "r2_ind", "losaw-rf", 0.635},
    {"A6", "continuous", 100, 1.0, 5000, 1, "r2_ind", "rf", 0.768},
    {"A6", "continuous", 100, 1.0, 5000, 1, "r2_ind", "losaw-rf", 0.802},
    {"A6", "continuous", 100, 0.1, 500, 1, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 0.1, 500, 1, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 0.1, 5000, 1, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 0.1, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 1.0, 500, 1, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 1.0, 500, 1, "pr_auc", "losaw-rf", 0.997},
    {"A6", "continuous", 100, 1.0, 5000, 1, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 1.0, 5000, 1, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 0.1, 500, 2, "r2_test", "rf", 0.830},
    {"A6", "continuous", 100, 0.1, 500, 2, "r2_test", "losaw-rf", 0.823},
    {"A6", "continuous", 100, 0.1, 5000, 2, "r2_test", "rf", 0.889},
    {"A6", "continuous", 100, 0.1, 5000, 2, "r2_test", "losaw-rf", 0.887},
    {"A6", "continuous", 100, 1.0, 500, 2, "r2_test", "rf", 0.425},
    {"A6", "continuous", 100, 1.0, 500, 2, "r2_test", "losaw-rf", 0.416},
    {"A6", "continuous", 100, 1.0, 5000, 2, "r2_test", "rf", 0.481},
    {"A6", "continuous", 100, 1.0, 5000, 2, "r2_test", "losaw-rf", 0.477},
    {"A6", "continuous", 100, 0.1, 500, 2, "r2_ind", "rf", 0.681},
    {"A6", "continuous", 100, 0.1, 500, 2, "r2_ind", "losaw-rf", 0.709},
    {"A6", "continuous", 100, 0.1, 5000, 2, "r2_ind", "rf", 0.823},
    {"A6", "continuous", 100, 0.1, 5000, 2, "r2_ind", "losaw-rf", 0.849},
    {"A6", "continuous", 100, 1.0, 500, 2, "r2_ind", "rf", 0.582},
    {"A6", "continuous", 100, 1.0, 500, 2, "r2_ind", "losaw-rf", 0.587},
    {"A6", "continuous", 100, 1.0, 5000, 2, "r2_ind", "rf", 0.771},
    {"A6", "continuous", 100, 1.0, 5000, 2, "r2_ind", "losaw-rf", 0.797},
    {"A6", "continuous", 100, 0.1, 500, 2, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 0.1, 500, 2, "pr_auc", "losaw-rf", 0.999},
    {"A6", "continuous", 100, 0.1, 5000, 2, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 0.1, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 1.0, 500, 2, "pr_auc", "rf", 0.988},
    {"A6", "continuous", 100, 1.0, 500, 2, "pr_auc", "losaw-rf", 0.951},
    {"A6", "continuous", 100, 1.0, 5000, 2, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 1.0, 5000, 2, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 0.1, 500, 3, "r2_test", "rf", 0.849},
    {"A6", "continuous", 100, 0.1, 500, 3, "r2_test", "losaw-rf", 0.845},
    {"A6", "continuous", 100, 0.1, 5000, 3, "r2_test", "rf", 0.885},
    {"A6", "continuous", 100, 0.1, 5000, 3, "r2_test", "losaw-rf", 0.888},
    {"A6", "continuous", 100, 1.0, 500, 3, "r2_test", "rf", 0.447},
    {"A6", "continuous", 100, 1.0, 500, 3, "r2_test", "losaw-rf", 0.436},
    {"A6", "continuous", 100, 1.0, 5000, 3, "r2_test", "rf", 0.479},
    {"A6", "continuous", 100, 1.0, 5000, 3, "r2_test", "losaw-rf", 0.478},
    {"A6", "continuous", 100, 0.1, 500, 3, "r2_ind", "rf", 0.315},
    {"A6", "continuous", 100, 0.1, 500, 3, "r2_ind", "losaw-rf", 0.516},
    {"A6", "continuous", 100, 0.1, 5000, 3, "r2_ind", "rf", 0.445},
    {"A6", "continuous", 100, 0.1, 5000, 3, "r2_ind", "losaw-rf", 0.668},
    {"A6", "continuous", 100, 1.0, 500, 3, "r2_ind", "rf", 0.313},
    {"A6", "continuous", 100, 1.0, 500, 3, "r2_ind", "losaw-rf", 0.476},
    {"A6", "continuous", 100, 1.0, 5000, 3, "r2_ind", "rf", 0.381},
    {"A6", "continuous", 100, 1.0, 5000, 3, "r2_ind", "losaw-rf", 0.648},
    {"A6", "continuous", 100, 0.1, 500, 3, "pr_auc", "rf", 0.417},
    {"A6", "continuous", 100, 0.1, 500, 3, "pr_auc", "losaw-rf", 0.547},
    {"A6", "continuous", 100, 0.1, 5000, 3, "pr_auc", "rf", 0.417},
    {"A6", "continuous", 100, 0.1, 5000, 3, "pr_auc", "losaw-rf", 0.656},
    {"A6", "continuous", 100, 1.0, 500, 3, "pr_auc", "rf", 0.421},
    {"A6", "continuous", 100, 1.0, 500, 3, "pr_auc", "losaw-rf", 0.678},
    {"A6", "continuous", 100, 1.0, 5000, 3, "pr_auc", "rf", 0.417},
    {"A6", "continuous", 100, 1.0, 5000, 3, "pr_auc", "losaw-rf", 0.786},
    {"A6", "continuous", 100, 0.1, 500, 4, "r2_test", "rf", 0.833},
    {"A6", "continuous", 100, 0.1, 500, 4, "r2_test", "losaw-rf", 0.823},
    {"A6", "continuous", 100, 0.1, 5000, 4, "r2_test", "rf", 0.879},
    {"A6", "continuous", 100, 0.1, 5000, 4, "r2_test", "losaw-rf", 0.877},
    {"A6", "continuous", 100, 1.0, 500, 4, "r2_test", "rf", 0.440},
    {"A6", "continuous", 100, 1.0, 500, 4, "r2_test", "losaw-rf", 0.430},
    {"A6", "continuous", 100, 1.0, 5000, 4, "r2_test", "rf", 0.478},
    {"A6", "continuous", 100, 1.0, 5000, 4, "r2_test", "losaw-rf", 0.475},
    {"A6", "continuous", 100, 0.1, 500, 4, "r2_ind", "rf", 0.369},
    {"A6", "continuous", 100, 0.1, 500, 4, "r2_ind", "losaw-rf", 0.520},
    {"A6", "continuous", 100, 0.1, 5000, 4, "r2_ind", "rf", 0.464},
    {"A6", "continuous", 100, 0.1, 5000, 4, "r2_ind", "losaw-rf", 0.685},
    {"A6", "continuous", 100, 1.0, 500, 4, "r2_ind", "rf", 0.345},
    {"A6", "continuous", 100, 1.0, 500, 4, "r2_ind", "losaw-rf", 0.463},
    {"A6", "continuous", 100, 1.0, 5000, 4, "r2_ind", "rf", 0.423},
    {"A6", "continuous", 100, 1.0, 5000, 4, "r2_ind", "losaw-rf", 0.635},
    {"A6", "continuous", 100, 0.1, 500, 4, "pr_auc", "rf", 0.513},
    {"A6", "continuous", 100, 0.1, 500, 4, "pr_auc", "losaw-rf", 0.659},
    {"A6", "continuous", 100, 0.1, 5000, 4, "pr_auc", "rf", 0.514},
    {"A6", "continuous", 100, 0.1, 5000, 4, "pr_auc", "losaw-rf", 0.714},
    {"A6", "continuous", 100, 1.0, 500, 4, "pr_auc", "rf", 0.511},
    {"A6", "continuous", 100, 1.0, 500, 4, "pr_auc", "losaw-rf", 0.716},
    {"A6", "continuous", 100, 1.0, 5000, 4, "pr_auc", "rf", 0.514},
    {"A6", "continuous", 100, 1.0, 5000, 4, "pr_auc", "losaw-rf", 0.787},
    {"A6", "continuous", 100, 0.1, 500, 5, "r2_test", "rf", 0.830},
    {"A6", "continuous", 100, 0.1, 500, 5, "r2_test", "losaw-rf", 0.848},
    {"A6", "continuous", 100, 0.1, 5000, 5, "r2_test", "rf", 0.902},
    {"A6", "continuous", 100, 0.1, 5000, 5, "r2_test", "losaw-rf", 0.903},
    {"A6", "continuous", 100, 1.0, 500, 5, "r2_test", "rf", 0.431},
    {"A6", "continuous", 100, 1.0, 500, 5, "r2_test", "losaw-rf", 0.441},
    {"A6", "continuous", 100, 1.0, 5000, 5, "r2_test", "rf", 0.488},
    {"A6", "continuous", 100, 1.0, 5000, 5, "r2_test", "losaw-rf", 0.490},
    {"A6", "continuous", 100, 0.1, 500, 5, "r2_ind", "rf", 0.752},
    {"A6", "continuous", 100, 0.1, 500, 5, "r2_ind", "losaw-rf", 0.815},
    {"A6", "continuous", 100, 0.1, 5000, 5, "r2_ind", "rf", 0.972},
    {"A6", "continuous", 100, 0.1, 5000, 5, "r2_ind", "losaw-rf", 0.969},
    {"A6", "continuous", 100, 1.0, 500, 5, "r2_ind", "rf", 0.661},
    {"A6", "continuous", 100, 1.0, 500, 5, "r2_ind", "losaw-rf", 0.743},
    {"A6", "continuous", 100, 1.0, 5000, 5, "r2_ind", "rf", 0.941},
    {"A6", "continuous", 100, 1.0, 5000, 5, "r2_ind", "losaw-rf", 0.945},
    {"A6", "continuous", 100, 0.1, 500, 5, "pr_auc", "rf", 0.629},
    {"A6", "continuous", 100, 0.1, 500, 5, "pr_auc", "losaw-rf", 0.959},
    {"A6", "continuous", 100, 0.1, 5000, 5, "pr_auc", "rf", 0.881},
    {"A6", "continuous", 100, 0.1, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 1.0, 500, 5, "pr_auc", "rf", 0.677},
    {"A6", "continuous", 100, 1.0, 500, 5, "pr_auc", "losaw-rf", 0.955},
    {"A6", "continuous", 100, 1.0, 5000, 5, "pr_auc", "rf", 0.856},
    {"A6", "continuous", 100, 1.0, 5000, 5, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 0.1, 500, 6, "r2_test", "rf", 0.844},
    {"A6", "continuous", 100, 0.1, 500, 6, "r2_test", "losaw-rf", 0.850},
    {"A6", "continuous", 100, 0.1, 5000, 6, "r2_test", "rf", 0.902},
    {"A6", "continuous", 100, 0.1, 5000, 6, "r2_test", "losaw-rf", 0.903},
    {"A6", "continuous", 100, 1.0, 500, 6, "r2_test", "rf", 0.440},
    {"A6", "continuous", 100, 1.0, 500, 6, "r2_test", "losaw-rf", 0.441},
    {"A6", "continuous", 100, 1.0, 5000, 6, "r2_test", "rf", 0.495},
    {"A6", "continuous", 100, 1.0, 5000, 6, "r2_test", "losaw-rf", 0.497},
    {"A6", "continuous", 100, 0.1, 500, 6, "r2_ind", "rf", 0.826},
    {"A6", "continuous", 100, 0.1, 500, 6, "r2_ind", "losaw-rf", 0.846},
    {"A6", "continuous", 100, 0.1, 5000, 6, "r2_ind", "rf", 0.979},
    {"A6", "continuous", 100, 0.1, 5000, 6, "r2_ind", "losaw-rf", 0.970},
    {"A6", "continuous", 100, 1.0, 500, 6, "r2_ind", "rf", 0.757},
    {"A6", "continuous", 100, 1.0, 500, 6, "r2_ind", "losaw-rf", 0.775},
    {"A6", "continuous", 100, 1.0, 5000, 6, "r2_ind", "rf", 0.961},
    {"A6", "continuous", 100, 1.0, 5000, 6, "r2_ind", "losaw-rf", 0.942},
    {"A6", "continuous", 100, 0.1, 500, 6, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 0.1, 500, 6, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 0.1, 5000, 6, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 0.1, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 1.0, 500, 6, "pr_auc", "rf", 0.999},
    {"A6", "continuous", 100, 1.0, 500, 6, "pr_auc", "losaw-rf", 0.996},
    {"A6", "continuous", 100, 1.0, 5000, 6, "pr_auc", "rf", 1.000},
    {"A6", "continuous", 100, 1.0, 5000, 6, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 0.1, 500, 7, "r2_test", "rf", 0.829},
    {"A6", "continuous", 100, 0.1, 500, 7, "r2_test", "losaw-rf", 0.843},
    {"A6", "continuous", 100, 0.1, 5000, 7, "r2_test", "rf", 0.898},
    {"A6", "continuous", 100, 0.1, 5000, 7, "r2_test", "losaw-rf", 0.901},
    {"A6", "continuous", 100, 1.0, 500, 7, "r2_test", "rf", 0.417},
    {"A6", "continuous", 100, 1.0, 500, 7, "r2_test", "losaw-rf", 0.421},
    {"A6", "continuous", 100, 1.0, 5000, 7, "r2_test", "rf", 0.483},
    {"A6", "continuous", 100, 1.0, 5000, 7, "r2_test", "losaw-rf", 0.487},
    {"A6", "continuous", 100, 0.1, 500, 7, "r2_ind", "rf", 0.741},
    {"A6", "continuous", 100, 0.1, 500, 7, "r2_ind", "losaw-rf", 0.805},
    {"A6", "continuous", 100, 0.1, 5000, 7, "r2_ind", "rf", 0.949},
    {"A6", "continuous", 100, 0.1, 5000, 7, "r2_ind", "losaw-rf", 0.964},
    {"A6", "continuous", 100, 1.0, 500, 7, "r2_ind", "rf", 0.623},
    {"A6", "continuous", 100, 1.0, 500, 7, "r2_ind", "losaw-rf", 0.682},
    {"A6", "continuous", 100, 1.0, 5000, 7, "r2_ind", "rf", 0.901},
    {"A6", "continuous", 100, 1.0, 5000, 7, "r2_ind", "losaw-rf", 0.915},
    {"A6", "continuous", 100, 0.1, 500, 7, "pr_auc", "rf", 0.734},
    {"A6", "continuous", 100, 0.1, 500, 7, "pr_auc", "losaw-rf", 0.958},
    {"A6", "continuous", 100, 0.1, 5000, 7, "pr_auc", "rf", 0.919},
    {"A6", "continuous", 100, 0.1, 5000, 7, "pr_auc", "losaw-rf", 1.000},
    {"A6", "continuous", 100, 1.0, 500, 7, "pr_auc", "rf", 0.736},
    {"A6", "continuous", 100, 1.0, 500, 7, "pr_auc", "losaw-rf", 0.885},
    {"A6", "continuous", 100, 1.0, 5000, 7, "pr_auc", "rf", 0.896},
    {"A6", "continuous", 100, 1.0, 5000, 7, "pr_auc", "losaw-rf", 1.000},
};

}  // namespace

std::span<const ReferenceValue> reference_values() { return kValues; }

std::vector<std::string> reference_table_ids() {
  std::vector<std::string> ids;
  for (const auto& v : kValues)
    if (std::find(ids.begin(), ids.end(), v.table) == ids.end()) ids.emplace_back(v.table);
  return ids;
}

}  // namespace losaw
