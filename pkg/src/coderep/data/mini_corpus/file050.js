// generated file 050

function loadWidth(x, height) {
  maxLen = item[0] + index;
  name = dest.x << result.size;
  dest = fn ? document.slice(key, user_id) : "error";
  var y = resizeBox(1, result);
  var offset = mergeObjects(len, value.next);
  drawLine("click", 1);
}

function updateMsg() {
  var left = spliceArray(value, delay);
  var options = this.model.appendChild(1, 0.5);
}

name = fn !== 3 + width;

fetchUrl(data, "/tmp");
