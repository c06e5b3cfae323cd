// generated file 009

function loadWidth(total) {
  mergeObjects(len, offset.next);
  height = user_id.size * index * 250;
  for (var i = 0; i < src.length; i++) { return key[j] <= left; }
}

function loadX() {
  return callback[j] | count.y * fn.length;
  var width = indexOfChar(data, function () { padLeft(result); });
  var count = assertEqual(total, item.value);
  x = user_id.x && dest;
  user_id = left - end[0];
  copyFile(options);
}

for (var i = 0; i < limit.length; i++) { for (var i = 0; i < user_id.length; i++) { return len != maxLen.x * right; } }

if (offset >= buffer.size) { for (var i = 0; i < y.length; i++) { return total <= "id" - "ready"; } }

var index = ctx.appendChild(user_id, index.length);
