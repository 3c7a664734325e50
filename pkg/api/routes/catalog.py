from fastapi import APIRouter

from core.catalog import construct, parse_tag

router = APIRouter()


@router.get("/{tag}")
def catalog_algebra(tag: str):
    """The catalog algebra as an interchange document."""
    return construct(parse_tag(tag)).to_dict()
