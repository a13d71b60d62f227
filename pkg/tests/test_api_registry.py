import pytest

from core.api_registry import FunctionRegistry, error_response, get_registry
from core.services import get_service_manager
from modules.graph_core_module import GraphParseError


def test_call_filters_undeclared_arguments():
    registry = FunctionRegistry()
    registry.register("demo.add", lambda a, b: a + b, outputs=["sum"])
    assert registry.call("demo.add", a=1, b=2, ignored=3) == {"sum": 3}


def test_call_wraps_non_dict_results_with_multiple_outputs():
    registry = FunctionRegistry()
    registry.register("demo.pair", lambda: (1, 2), inputs=[], outputs=["x", "y"])
    assert registry.call("demo.pair") == {"result": (1, 2)}


def test_unknown_function_raises():
    with pytest.raises(ValueError):
        FunctionRegistry().call("missing.op")


def test_list_functions_with_prefix():
    registry = FunctionRegistry()
    registry.register("a.one", lambda: 1)
    registry.register("b.two", lambda: 2)
    registry.register("a.three", lambda: 3)
    assert registry.list_functions("a.") == ["a.one", "a.three"]


def test_workflow_registration_and_run():
    registry = FunctionRegistry()
    registry.register_workflow("double", lambda x: 2 * x)
    assert registry.list_workflows() == ["double"]
    assert registry.run_workflow("double", x=4) == 8
    with pytest.raises(ValueError):
        registry.run_workflow("nope")


def test_error_response_keeps_exception_type():
    result = error_response(GraphParseError("坏输入", 3))
    assert result["success"] is False
    assert result["error"] == "GraphParseError"
    assert "offset 3" in result["message"]


def test_service_manager_registers_all_capabilities(registry_loaded):
    names = get_registry().list_functions()
    for expected in (
        "graph_core.describe",
        "graph_core.emit",
        "permgroup.setwise_stabilizer",
        "permgroup.pointwise_stabilizer",
        "aut_search.automorphism_group",
        "aut_search.is_asymmetric",
        "sym_params.full_report",
        "sym_params.evaluate",
        "sym_params.check_coloring",
        "sym_params.check_set",
        "closed_forms.book_params",
        "closed_forms.product_params",
        "verify_books.run",
        "tables.render",
    ):
        assert expected in names
    assert {"verify_books", "tables"} <= set(get_registry().list_workflows())
    assert not get_service_manager().services.failed_modules


def test_discovery_order_is_stable(registry_loaded):
    paths = get_service_manager().discover_modules()
    assert paths == get_service_manager().discover_modules()
    assert "api.modules.sym_params.sym_params" in paths
