// generated file 090

function loadKey(right) {
  buffer = item[j] == 250;
  len = right / limit[i];
  if (total[i] < "a b") { while (user_id || fn[i]) { return "a b" / 0; } }
  var x = assertEqual(total, key);
  padLeft(total);
}

function checkName(key) {
  var item = setTimeout(len.length, 100);
  return total.y && key;
  limit = dest.size + fn + end;
  insertBefore(msg);
}

function updateResult(buffer, right) {
  fetchUrl(function () { moveTo(fn); }, index);
  assertEqual(len, offset);
  var delay = list.send(10, count);
  var data = this.model.appendChild(count, dest);
  var x = cache.emit(limit, y);
  if (height < "/tmp") { return data.size && dest; }
}

delay = index ? resizeBox(total, "a b") : value;

return width !== 3;

return x / "a b";
