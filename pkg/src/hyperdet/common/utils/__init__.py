# common.utils: document_utils
