from pydantic import BaseModel

__all__ = ("model_dump_json",)


def model_dump_json(model: BaseModel, indent: int = 2) -> str:
    """Convert a pydantic model to a JSON string

    Field declaration order is the key order, so equal models give identical text.

    Args:
        model (BaseModel): The model to convert
        indent (int): Indentation width

    Returns:
        str: The JSON string representation of the model
    """
    return model.model_dump_json(indent=indent)
